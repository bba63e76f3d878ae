import sys
from typing import List, Optional, TextIO

from ea2hg.cli.cli_args import RunConfig
from ea2hg.cli.common import jsonify_model
from ea2hg.ea2_core import Element, format_element, to_table
from ea2hg.hg_kernel import TableHypergroup


def element_name(x: Element) -> str:
    return "e" if x == 0 else format_element(x)


def render_table(t: TableHypergroup) -> List[str]:
    """Rows of the table with elements named by support sets, e for the identity."""
    names = [element_name(x) for x in range(t.n)]
    cells = [
        ["{" + ", ".join(names[z] for z in t.product(x, y)) + "}" for y in range(t.n)]
        for x in range(t.n)
    ]
    label_width = max(len(name) for name in names)
    widths = [
        max([len(names[y])] + [len(cells[x][y]) for x in range(t.n)]) for y in range(t.n)
    ]
    header = "o".ljust(label_width) + " | " + "  ".join(
        names[y].ljust(widths[y]) for y in range(t.n)
    )
    lines = [header.rstrip(), "-" * len(header.rstrip())]
    for x in range(t.n):
        row = names[x].ljust(label_width) + " | " + "  ".join(
            cells[x][y].ljust(widths[y]) for y in range(t.n)
        )
        lines.append(row.rstrip())
    return lines


def cmd_table(config: RunConfig, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    t = to_table(config.signature)
    if config.output_format == "structured":
        out.write(jsonify_model(t.to_document()) + "\n")
    else:
        for line in render_table(t):
            out.write(line + "\n")
    return 0
