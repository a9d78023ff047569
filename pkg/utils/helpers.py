#!/usr/bin/python3
# -*- coding: utf-8 -*-

import unicodedata
import string
import logging
from datetime import datetime, timezone
from fractions import Fraction

# Valid characters for filenames
valid_filename_chars = "-_.()%s%s" % (string.ascii_letters, string.digits)
char_limit = 255


def clean_filename(filename, whitelist=valid_filename_chars, replace=' '):
    """
    Clean a filename to ensure it only contains valid characters.

    graph6 text uses every printable character from '?' to '~', so names
    derived from it lose the characters outside the whitelist.

    Args:
        filename (str): The filename to clean
        whitelist (str): Characters to allow in the filename
        replace (str): Characters to replace with underscore

    Returns:
        str: Cleaned filename
    """
    # replace spaces
    for r in replace:
        filename = filename.replace(r, '_')

    # keep only valid ascii chars
    cleaned_filename = unicodedata.normalize('NFKD', filename).encode('ASCII', 'ignore').decode()

    # keep only whitelisted chars
    cleaned_filename = ''.join(c for c in cleaned_filename if c in whitelist)
    if len(cleaned_filename) > char_limit:
        logging.warning(f"Warning, filename truncated because it was over {char_limit}. Filenames may no longer be unique")
    return cleaned_filename[:char_limit]


def format_timestamp(moment=None):
    """
    Format a moment as an ISO 8601 UTC timestamp with second precision.

    Args:
        moment (datetime, optional): Timezone-aware datetime. Defaults to now.

    Returns:
        str: e.g. '2024-05-01T12:00:00Z'
    """
    moment = moment or datetime.now(timezone.utc)
    return moment.astimezone(timezone.utc).strftime('%Y-%m-%dT%H:%M:%SZ')


def rational_to_dict(value):
    """Serialise a rational as {num, den}; None passes through."""
    if value is None:
        return None
    value = Fraction(value)
    return {'num': value.numerator, 'den': value.denominator}


def rational_to_str(value):
    """'5/2' for non-integers, '3' for integers, '' for None."""
    if value is None:
        return ''
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text):
    """
    Parse '1/10', '0.1' or '3' as an exact Fraction.

    Decimal strings are read exactly, so '0.1' is 1/10 and not the nearest
    binary float.

    Raises:
        ValueError: If the text is not a number
    """
    return Fraction(str(text).strip())


def read_graph6_lines(path):
    """
    Read a file with one graph6 string per line.

    Blank lines and lines starting with '#' are skipped.

    Args:
        path (str): File path

    Returns:
        list: The graph6 strings, in file order
    """
    with open(path, 'r', encoding='ascii') as f:
        lines = [line.strip() for line in f]
    return [line for line in lines if line and not line.startswith('#')]
