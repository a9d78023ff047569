#!/usr/bin/python3
# -*- coding: utf-8 -*-

from abc import ABC, abstractmethod


class ResultStoreProvider(ABC):
    """Abstract base class for result storage providers."""

    @abstractmethod
    def write_csv(self, name, header, rows, manifest):
        """
        Store a table of results together with its run manifest.

        Args:
            name (str): Output name without extension, e.g. 'census_Bw'
            header (list): Column names
            rows (iterable): Rows of values, one list per row
            manifest (RunManifest): Provenance of the run

        Returns:
            str or None: Where the table went, or None if nothing was written
        """
        pass

    @abstractmethod
    def write_json(self, name, payload, manifest):
        """
        Store a JSON report with the run manifest embedded under "manifest".

        Args:
            name (str): Output name without extension
            payload (dict): JSON-ready report
            manifest (RunManifest): Provenance of the run

        Returns:
            str or None: Where the report went, or None if nothing was written
        """
        pass
