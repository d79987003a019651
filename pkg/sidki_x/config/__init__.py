"""Configuration records and config-file loading"""
