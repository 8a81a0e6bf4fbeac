"""Benchmark generator and scoring harness for visual-to-symbolic field inference."""

__version__ = "0.1.0"
