"""Command-line surface: argument parsing, run configuration and subcommand handlers."""
