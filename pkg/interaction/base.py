#!/usr/bin/python3
# -*- coding: utf-8 -*-

from abc import ABC, abstractmethod


class InteractionProvider(ABC):
    """Abstract base class for run reporting providers."""

    @abstractmethod
    def report_start(self, subcommand, parameters):
        """
        Report that a run is starting.

        Args:
            subcommand (str): The CLI subcommand
            parameters (dict): Parameter echo of the run
        """
        pass

    @abstractmethod
    def report_completion(self, stats):
        """
        Report completion statistics.

        Args:
            stats (dict): Statistics including:
                - subcommand (str): The CLI subcommand
                - items (int): Graphs, rows or checks produced
                - outputs (list): Where results were written
                - elapsed (float): Wall-clock seconds
                - violations (int, optional): Violated inequalities (verify-bounds)
        """
        pass

    @staticmethod
    def format_summary(stats):
        """One human-readable line per statistic, shared by the providers."""
        lines = [f"{stats['subcommand']} finished in {stats['elapsed']:.1f}s: {stats['items']} item(s)"]
        if stats.get('violations') is not None:
            lines.append(f"Violations: {stats['violations']}")
        if stats.get('outputs'):
            lines.append(f"Outputs: {', '.join(stats['outputs'])}")
        return '\n'.join(lines)
