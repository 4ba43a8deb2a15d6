"""Line-oriented sectioned text format shared by dataset and profile files.

The grammar is deliberately small:

* ``# ...`` lines and blank lines are ignored.
* ``[section name]`` opens a section; everything until the next header
  belongs to it.
* Inside a section, lines are either ``key = value`` pairs or
  pipe-separated table rows (``cell | cell | ...``).

Both dataset and profile documents share this one parser so there is a
single grammar to test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError


@dataclass
class Line:
    number: int
    text: str


@dataclass
class Section:
    name: str
    header_line: int
    lines: list[Line] = field(default_factory=list)

    def pairs(self, source: str = "<input>") -> dict[str, str]:
        """Interpret every line as ``key = value``; duplicate keys are errors."""
        result: dict[str, str] = {}
        for line in self.lines:
            if "=" not in line.text:
                raise ParseError(
                    f"expected 'key = value' in section [{self.name}], got {line.text!r}",
                    source=source, line=line.number,
                )
            key, _, value = line.text.partition("=")
            key = key.strip()
            if key in result:
                raise ParseError(
                    f"duplicate key {key!r} in section [{self.name}]",
                    source=source, line=line.number,
                )
            result[key] = value.strip()
        return result

    def rows(self) -> list[tuple[int, list[str]]]:
        """Interpret every line as a pipe-separated table row."""
        return [
            (line.number, [cell.strip() for cell in line.text.split("|")])
            for line in self.lines
        ]


def parse_sections(text: str, source: str = "<input>") -> list[Section]:
    sections: list[Section] = []
    current: Section | None = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError("unterminated section header", source=source, line=number)
            current = Section(name=line[1:-1].strip(), header_line=number)
            sections.append(current)
            continue
        if current is None:
            raise ParseError(
                f"content before first section header: {line!r}",
                source=source, line=number,
            )
        current.lines.append(Line(number=number, text=line))
    return sections


def sections_by_name(
    sections: list[Section],
    expected: set[str],
    source: str = "<input>",
) -> dict[str, Section]:
    """Index sections by name, rejecting duplicates and unknown names."""
    result: dict[str, Section] = {}
    for section in sections:
        if section.name not in expected:
            raise ParseError(
                f"unknown section [{section.name}]",
                source=source, line=section.header_line,
            )
        if section.name in result:
            raise ParseError(
                f"duplicate section [{section.name}]",
                source=source, line=section.header_line,
            )
        result[section.name] = section
    return result
