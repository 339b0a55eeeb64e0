"""Data models and exceptions."""
