"""Version of hfree-lab, echoed into every run manifest."""

import os
import logging

VERSION_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'VERSION')


def get_version(path=VERSION_FILE):
    """
    Read the release version that semantic-release writes to VERSION.

    Returns:
        str: The version, or 'unknown' when the file is missing or empty
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            version = f.read().strip()
    except OSError as e:
        logging.debug(f"Cannot read {path}: {e}")
        return 'unknown'
    return version or 'unknown'


__version__ = get_version()
