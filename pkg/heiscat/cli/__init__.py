"""Command-line surface: spec loading, named suites and JSON reports."""
