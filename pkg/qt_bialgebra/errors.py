from __future__ import annotations


class QtbError(Exception):
    pass


class ParseError(QtbError, ValueError):
    """
    Bad input text. JSON syntax errors carry a line and column in the file.
    Coefficient errors carry the JSON path and a column inside that string.
    """

    def __init__(
        self,
        message: str,
        *,
        line: int | None = None,
        column: int | None = None,
        path: str | None = None,
    ) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(self.describe())

    def describe(self) -> str:
        if self.path and self.line is None and self.column is not None:
            return f"{self.message} (column {self.column} of the string at {self.path})"
        where: list[str] = []
        if self.path:
            where.append(self.path)
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class DegreeDerivationNotRepresentable(QtbError):
    pass


class NotInImage(QtbError):
    pass


class OutOfWindow(QtbError):
    pass


class ZeroDegree(QtbError, ValueError):
    pass


class UnknownSuite(QtbError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown suite"
