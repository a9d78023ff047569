#!/usr/bin/python3
# -*- coding: utf-8 -*-

import io
import json

import requests

from interaction.base import InteractionProvider
from interaction.local import LocalInteractionProvider
from interaction.ntfy import NtfyInteractionProvider

STATS = {'subcommand': 'census', 'elapsed': 1.3, 'items': 3, 'outputs': ['out/census.csv']}


class _Response:
    def __init__(self, status_code, text=''):
        self.status_code = status_code
        self.text = text


def test_format_summary():
    assert InteractionProvider.format_summary(STATS) == (
        "census finished in 1.3s: 3 item(s)\nOutputs: out/census.csv"
    )
    summary = InteractionProvider.format_summary({**STATS, 'violations': 0, 'outputs': []})
    assert summary.splitlines() == ["census finished in 1.3s: 3 item(s)", "Violations: 0"]


def test_local_provider_reports_to_its_stream():
    stream = io.StringIO()
    provider = LocalInteractionProvider(stream)
    provider.report_start('census', {'n': 4})
    provider.report_completion(STATS)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "Running census..."
    assert "All done!" in lines
    assert lines[-1] == "Outputs: out/census.csv"


def test_ntfy_posts_start_and_completion(monkeypatch):
    calls = []

    def fake_post(url, data, headers, timeout):
        calls.append((url, data.decode('utf-8'), headers))
        return _Response(200)

    monkeypatch.setattr(requests, 'post', fake_post)
    provider = NtfyInteractionProvider('runs', server='https://ntfy.example/', headers={'Authorization': 'Basic x'},
                                       stream=io.StringIO())
    provider.report_start('verify-bounds', {'families': 10})
    provider.report_completion({**STATS, 'subcommand': 'verify-bounds', 'violations': 2})

    assert [url for url, _, _ in calls] == ['https://ntfy.example/runs'] * 2
    assert json.loads(calls[0][1]) == {'families': 10}
    assert calls[0][2]['Title'] == 'hfree-lab verify-bounds started'
    assert calls[0][2]['Authorization'] == 'Basic x'
    assert calls[1][2]['Priority'] == 'high'
    assert 'Violations: 2' in calls[1][1]
    assert "All done!" in provider.stream.getvalue()


def test_ntfy_failures_are_logged_not_raised(monkeypatch, caplog):
    def failing_post(*args, **kwargs):
        raise requests.exceptions.ConnectionError("unreachable")

    monkeypatch.setattr(requests, 'post', failing_post)
    provider = NtfyInteractionProvider('runs', stream=io.StringIO())
    provider.report_completion(STATS)
    assert "Error sending notice via ntfy" in caplog.text
    assert "All done!" in provider.stream.getvalue()


def test_ntfy_rejected_notice(monkeypatch, caplog):
    monkeypatch.setattr(requests, 'post', lambda *args, **kwargs: _Response(403, 'forbidden'))
    provider = NtfyInteractionProvider('runs', stream=io.StringIO())
    assert not provider._post('title', 'message')
    assert "403, forbidden" in caplog.text
