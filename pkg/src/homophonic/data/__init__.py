"""Bundled homophone corpora (.hq files)."""
