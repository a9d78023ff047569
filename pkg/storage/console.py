#!/usr/bin/python3
# -*- coding: utf-8 -*-

import sys
import csv
import json
import logging
from storage.base import ResultStoreProvider
from utils.helpers import format_timestamp


class ConsoleStoreProvider(ResultStoreProvider):
    """Storage provider that writes results to stdout; manifests go to the log."""

    def __init__(self, stream=None):
        """
        Args:
            stream (file, optional): Text stream for data. Defaults to sys.stdout.
        """
        self.stream = stream or sys.stdout

    def write_csv(self, name, header, rows, manifest):
        manifest.finished = format_timestamp()
        writer = csv.writer(self.stream, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        self.stream.flush()
        manifest.outputs.append('<stdout>')
        logging.info(f"Manifest: {json.dumps(manifest.to_dict(), sort_keys=True)}")
        return '<stdout>'

    def write_json(self, name, payload, manifest):
        manifest.finished = format_timestamp()
        manifest.outputs.append('<stdout>')
        json.dump({**payload, 'manifest': manifest.to_dict()}, self.stream, indent=2, sort_keys=True)
        self.stream.write('\n')
        self.stream.flush()
        return '<stdout>'
