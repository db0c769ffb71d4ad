"""
CLI Commands

All command modules export a `handle(args)` function returning an exit code.
"""
