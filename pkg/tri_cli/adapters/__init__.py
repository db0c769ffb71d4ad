"""
CLI Adapters - Bridge between CLI and the calculator packages
"""
