"""Symbolic execution for WebAssembly 1.0 binaries."""
