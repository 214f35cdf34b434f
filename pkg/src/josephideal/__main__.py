"""Entry point for running josephideal as a module."""

from .cli.app import main

if __name__ == '__main__':
    main()
