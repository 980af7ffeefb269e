"""Output formats for annotated sentences: inline marks, TSV, s-expressions
and Graphviz DOT trees."""

from .binarize import to_sexpression


def render_inline(annotated, ascii_marks=False):
    """One line per sentence: each form with its mark appended (UTF-8
    arrows by default, '^'/' v'/'=' in ascii mode); unscored tokens are
    printed bare."""
    parts = []
    for tok, mark in annotated.tokens:
        if mark is None:
            parts.append(tok.form)
        elif ascii_marks:
            suffix = {"UP": "^", "DOWN": " v", "FLAT": "="}[mark.name]
            parts.append(tok.form + suffix)
        else:
            parts.append(tok.form + mark.pretty)
    return " ".join(parts)


def render_tsv(annotated):
    """token-id, form, upos, mark rows; '_' marks an unscored token."""
    lines = []
    for tok, mark in annotated.tokens:
        lines.append(
            "\t".join([str(tok.id), tok.form, tok.upos, mark.ascii if mark else "_"])
        )
    return "\n".join(lines)


def render_sexpr(annotated):
    return to_sexpression(annotated.tree)


def _dot_escape(text):
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_dot(annotated, index=0):
    """One digraph per sentence: internal nodes carry relation + mark,
    leaves carry form + mark, left children drawn before right."""
    lines = [f"digraph sentence_{index} {{"]
    lines.append('  node [shape=box, fontname="Helvetica"];')
    lines.append("  ordering=out;")
    counter = 0
    ids = {}

    def visit(node):
        nonlocal counter
        ids[id(node)] = f"n{counter}"
        counter += 1
        me = ids[id(node)]
        mark = "" if node.mark is None else " " + node.mark.pretty
        if node.is_leaf:
            label = _dot_escape(node.val.form) + mark
            lines.append(f'  {me} [label="{label}", shape=plaintext];')
        else:
            label = _dot_escape(node.val) + mark
            lines.append(f'  {me} [label="{label}"];')
            for child in (node.left, node.right):
                child_id = visit(child)
                lines.append(f"  {me} -> {child_id};")
        return me

    visit(annotated.tree)
    lines.append("}")
    return "\n".join(lines)


RENDERERS = {
    "inline": render_inline,
    "tsv": render_tsv,
    "sexpr": render_sexpr,
    "dot": render_dot,
}


def render(annotated, fmt, index=0):
    if fmt == "dot":
        return render_dot(annotated, index)
    try:
        return RENDERERS[fmt](annotated)
    except KeyError:
        raise ValueError(f"unknown output format {fmt!r}") from None
