"""
命令行入口
"""
import sys

from hurwitz.cli.app import run


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
