"""circle-restriction package

Certified numerics for the sharp Fourier extension inequality from L^2 of the
unit circle to L^6 of the plane: Bessel integrals, the named sequences and
their tables, the multilinear forms and the verification suites.
"""

__version__ = "0.1.0"


def main():
    """Main entry point for the package."""
    import sys

    from circle_restriction.replab.cli import main as cli_main

    try:
        sys.exit(cli_main())
    except KeyboardInterrupt:
        print("\nInterrupted.")
        sys.exit(130)


__all__ = [
    "main",
    "__version__",
]
