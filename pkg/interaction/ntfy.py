#!/usr/bin/python3
# -*- coding: utf-8 -*-

import requests
import logging
import json
from interaction.local import LocalInteractionProvider


class NtfyInteractionProvider(LocalInteractionProvider):
    """Interaction provider that also posts run notices to an ntfy topic."""

    def __init__(self, topic, server="https://ntfy.sh", headers=None, stream=None):
        """
        Initialize the ntfy interaction provider.

        Args:
            topic (str): ntfy topic to send notifications to
            server (str, optional): ntfy server URL. Defaults to "https://ntfy.sh".
            headers (dict, optional): Additional headers for ntfy requests.
            stream (file, optional): Console stream. Defaults to sys.stderr.
        """
        super().__init__(stream)
        self.ntfy_topic = topic
        self.ntfy_server = server.rstrip('/')
        self.ntfy_headers = headers or {}

    def _post(self, title, message, priority="default"):
        headers = {
            "Title": title,
            "Priority": priority,
            **self.ntfy_headers
        }
        try:
            response = requests.post(
                f"{self.ntfy_server}/{self.ntfy_topic}",
                data=message.encode('utf-8'),
                headers=headers,
                timeout=30
            )
            if response.status_code != 200:
                logging.error(f"Failed to send notice via ntfy: {response.status_code}, {response.text}")
                return False
            return True
        except requests.exceptions.RequestException as e:
            logging.error(f"Error sending notice via ntfy: {str(e)}")
            return False

    def report_start(self, subcommand, parameters):
        super().report_start(subcommand, parameters)
        self._post(f"hfree-lab {subcommand} started", json.dumps(parameters, sort_keys=True, default=str))

    def report_completion(self, stats):
        """
        Report completion statistics via ntfy and on the console.

        Args:
            stats (dict): Run statistics
        """
        priority = "high" if stats.get('violations') else "default"
        if self._post(f"hfree-lab {stats['subcommand']} completed", self.format_summary(stats), priority):
            logging.info("Completion report sent via ntfy.")
        super().report_completion(stats)
