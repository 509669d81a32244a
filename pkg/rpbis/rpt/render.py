"""
Debug renderers for canonical trees.
"""

from typing import List

from rpbis.rpt.tree import Rpt
from rpbis.utils.rational_tools import render_prob


def _tree_lines(t: Rpt, pad: str, decimal: bool) -> List[str]:
    lines = ["nil" if t.is_nil else "*"]
    for action, children in t.succ:
        for child, weight in children:
            child_lines = _tree_lines(child, pad + "    ", decimal)
            lines.append(f"{pad}  -{action}-> {render_prob(weight, decimal)}: {child_lines[0]}")
            lines.extend(child_lines[1:])
    return lines


def render_tree(t: Rpt, decimal: bool = False) -> str:
    """
    Indented text of a tree. Inner nodes print as ``*``, leaves as ``nil``;
    every edge shows its action and weight.
    """
    return "\n".join(_tree_lines(t, "", decimal))


def render_dot(t: Rpt, decimal: bool = False) -> str:
    """
    Graphviz DOT text of a tree. Shared subtrees are drawn once per position.
    """
    lines = ["digraph rpt {", '    node [shape=circle, label=""];']
    counter = [0]

    def visit(node: Rpt) -> str:
        name = f"n{counter[0]}"
        counter[0] += 1
        shape = "point" if node.is_nil else "circle"
        lines.append(f"    {name} [shape={shape}];")
        for action, children in node.succ:
            for child, weight in children:
                child_name = visit(child)
                label = f"{action} {render_prob(weight, decimal)}"
                lines.append(f'    {name} -> {child_name} [label="{label}"];')
        return name

    visit(t)
    lines.append("}")
    return "\n".join(lines)
