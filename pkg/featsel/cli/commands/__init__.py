from featsel.cli.commands import convert, curves, run, summarize, toy

__all__ = ["convert", "curves", "run", "summarize", "toy"]
