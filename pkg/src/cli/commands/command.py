import argparse
from abc import ABC, abstractmethod
from typing import TextIO


class Command(ABC):
    """
    A subcommand of the command-line interface.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @abstractmethod
    def configure(self, parser: argparse.ArgumentParser) -> None:
        """
        Add the subcommand's own arguments.
        """
        pass

    @abstractmethod
    def run(self, args: argparse.Namespace, stdout: TextIO) -> int:
        """
        Execute the subcommand.

        :return: Process exit status.
        """
        pass

    def register(self, subparsers, parents) -> None:
        parser = subparsers.add_parser(self.name, help=self.description, description=self.description,
                                       parents=parents)
        self.configure(parser)
        parser.set_defaults(command=self)
