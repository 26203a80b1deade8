"""
Main entry point for the down-up spanning-tree sampler
Run with: python main.py <sample|verify|analyze|bench> [options]
"""

from app.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
