"""
Command-line surface: run, summarize, curves, convert and toy subcommands.
"""
