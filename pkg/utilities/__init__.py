"""Shared helpers: logging setup, .env loading and environment configuration."""
