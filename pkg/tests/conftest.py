import os
import sys

# Make tests/helpers.py importable regardless of how pytest resolves roots.
sys.path.insert(0, os.path.dirname(__file__))
