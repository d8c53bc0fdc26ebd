"""Shared pytest configuration; test helpers live in corpus.py."""
