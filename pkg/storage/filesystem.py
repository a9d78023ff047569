#!/usr/bin/python3
# -*- coding: utf-8 -*-

import os
import csv
import json
import logging
from storage.base import ResultStoreProvider
from utils.helpers import format_timestamp


class FileSystemStoreProvider(ResultStoreProvider):
    """Storage provider that writes results to files."""

    def __init__(self, out, dry_run=False):
        """
        Initialize with the output location.

        Args:
            out (str): A file path, or an existing directory in which file
                names are derived from the output name
            dry_run (bool, optional): If True, don't actually write files, just log
        """
        self.out = out
        self.dry_run = dry_run

    def _get_filepath(self, name, extension):
        """
        Resolve the file to write.

        Args:
            name (str): Output name without extension
            extension (str): '.csv' or '.json'

        Returns:
            str: The file path
        """
        if os.path.isdir(self.out):
            return os.path.join(self.out, f"{name}{extension}")
        parent = os.path.dirname(self.out)
        if parent and not self.dry_run:
            os.makedirs(parent, exist_ok=True)
        return self.out

    def _dump_json(self, path, payload):
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(payload, f, ensure_ascii=False, indent=2, sort_keys=True)
            f.write('\n')

    def write_csv(self, name, header, rows, manifest):
        """
        Write the table and its manifest as <path>.manifest.json.

        Returns:
            str or None: The CSV path, or None in dry-run mode
        """
        file_path = self._get_filepath(name, '.csv')
        manifest_path = f"{file_path}.manifest.json"
        if self.dry_run:
            logging.info(f"DRY RUN: Would store table to {file_path} and manifest to {manifest_path}")
            return None

        manifest.finished = format_timestamp()
        with open(file_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            writer.writerows(rows)
        manifest.outputs.append(file_path)
        self._dump_json(manifest_path, manifest.to_dict())
        logging.info(f"Stored table to {file_path}")
        return file_path

    def write_json(self, name, payload, manifest):
        """
        Write the report with the manifest embedded.

        Returns:
            str or None: The JSON path, or None in dry-run mode
        """
        file_path = self._get_filepath(name, '.json')
        if self.dry_run:
            logging.info(f"DRY RUN: Would store report to {file_path}")
            return None

        manifest.finished = format_timestamp()
        manifest.outputs.append(file_path)
        self._dump_json(file_path, {**payload, 'manifest': manifest.to_dict()})
        logging.info(f"Stored report to {file_path}")
        return file_path
