# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

from .cli import main

if __name__ == "__main__":  # pragma: no cover
    main(prog_name="unimodp")  # pylint: disable=all
