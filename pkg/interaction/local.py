#!/usr/bin/python3
# -*- coding: utf-8 -*-

import sys
from interaction.base import InteractionProvider


class LocalInteractionProvider(InteractionProvider):
    """Default interaction provider that reports to the console on stderr."""

    def __init__(self, stream=None):
        self.stream = stream or sys.stderr

    def report_start(self, subcommand, parameters):
        print(f"Running {subcommand}...", file=self.stream)

    def report_completion(self, stats):
        """
        Report completion statistics to the console.

        Args:
            stats (dict): Run statistics
        """
        print("\nAll done!", file=self.stream)
        print(self.format_summary(stats), file=self.stream)
