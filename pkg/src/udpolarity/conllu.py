"""Reading, validating and writing CoNLL-U dependency parses.

Only the columns that drive polarization are kept on each token (ID, FORM,
LEMMA, UPOS, HEAD, DEPREL); the remaining CoNLL-U columns are accepted on
input and written back as '_'. Multiword-token ranges ("3-4") and empty
nodes ("5.1") are skipped: polarization runs on the basic tree only.
"""

from dataclasses import dataclass, field


class ConlluError(Exception):
    """Malformed CoNLL-U input (bad column count, non-integer id/head, ...)."""


class ValidationError(ConlluError):
    """Structurally invalid sentence (cycle, multiple roots, dangling head)."""


@dataclass(frozen=True)
class Token:
    id: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str

    @property
    def is_punct(self):
        return self.upos == "PUNCT" or self.deprel == "punct"


@dataclass
class DependencyGraph:
    """One parsed sentence: tokens plus the head/deprel edges they carry."""

    tokens: list[Token]
    sentence_text: str = ""
    sent_id: str = ""
    _children: dict[int, list[Token]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._children:
            for tok in self.tokens:
                self._children.setdefault(tok.head, []).append(tok)
            for kids in self._children.values():
                kids.sort(key=lambda t: t.id)

    def token_by_id(self, tid):
        for tok in self.tokens:
            if tok.id == tid:
                return tok
        raise KeyError(tid)


def graph_root(graph):
    """Return the unique token whose head is 0."""
    for tok in graph.tokens:
        if tok.head == 0:
            return tok
    raise ValidationError(f"sentence {graph.sent_id or '?'}: no root token")


def children_of(graph, token):
    """All (deprel, dependent) pairs governed by `token`, in token-id order."""
    return [(t.deprel, t) for t in graph._children.get(token.id, [])]


def _validate(tokens, label):
    ids = [t.id for t in tokens]
    if len(set(ids)) != len(ids):
        raise ValidationError(f"sentence {label}: duplicate token ids")
    roots = [t for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise ValidationError(
            f"sentence {label}: expected exactly one root, found {len(roots)}"
        )
    known = set(ids)
    for t in tokens:
        if t.id < 1:
            raise ValidationError(f"sentence {label}: token id {t.id} < 1")
        if t.head == t.id:
            raise ValidationError(
                f"sentence {label}: token {t.id} is its own head"
            )
        if t.head != 0 and t.head not in known:
            raise ValidationError(
                f"sentence {label}: token {t.id} has dangling head {t.head}"
            )
        if t.head >= 0 and not t.deprel:
            raise ValidationError(f"sentence {label}: token {t.id} lacks a deprel")
    # every token must reach the root; anything left over sits on a cycle
    parent = {t.id: t.head for t in tokens}
    for t in tokens:
        seen = set()
        cur = t.id
        while cur != 0:
            if cur in seen:
                raise ValidationError(f"sentence {label}: cycle through token {cur}")
            seen.add(cur)
            cur = parent[cur]


def _parse_token_line(line, lineno):
    cols = line.split("\t")
    if len(cols) != 10:
        raise ConlluError(f"line {lineno}: expected 10 columns, got {len(cols)}")
    tid, form, lemma, upos, _xpos, _feats, head, deprel, _deps, _misc = cols
    if "-" in tid or "." in tid:
        return None  # multiword range / empty node
    try:
        tid_val = int(tid)
    except ValueError:
        raise ConlluError(f"line {lineno}: non-integer token id {tid!r}") from None
    try:
        head_val = int(head)
    except ValueError:
        raise ConlluError(f"line {lineno}: non-integer head {head!r}") from None
    if head_val < 0:
        raise ConlluError(f"line {lineno}: negative head {head_val}")
    return Token(
        id=tid_val,
        form=form,
        lemma=lemma if lemma != "_" else form.lower(),
        upos=upos,
        head=head_val,
        deprel=deprel if deprel != "_" else "",
    )


def parse_conllu(text):
    """Parse CoNLL-U text into a list of DependencyGraph, one per sentence."""
    graphs = []
    tokens = []
    sent_text = None
    sent_id = None
    n_sentences = 0

    def flush():
        nonlocal tokens, sent_text, sent_id, n_sentences
        if not tokens and sent_text is None and sent_id is None:
            return
        if tokens:
            n_sentences += 1
            label = sent_id or str(n_sentences)
            _validate(tokens, label)
            graphs.append(
                DependencyGraph(
                    tokens=list(tokens),
                    sentence_text=sent_text or " ".join(t.form for t in tokens),
                    sent_id=sent_id or str(n_sentences),
                )
            )
        tokens = []
        sent_text = None
        sent_id = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("text") and "=" in body:
                sent_text = body.split("=", 1)[1].strip()
            elif body.startswith("sent_id") and "=" in body:
                sent_id = body.split("=", 1)[1].strip()
            continue
        tok = _parse_token_line(line, lineno)
        if tok is not None:
            tokens.append(tok)
    flush()
    return graphs


def serialize_conllu(graphs):
    """Write graphs back out as CoNLL-U text (unkept columns become '_')."""
    blocks = []
    for graph in graphs:
        lines = []
        if graph.sent_id:
            lines.append(f"# sent_id = {graph.sent_id}")
        if graph.sentence_text:
            lines.append(f"# text = {graph.sentence_text}")
        for t in graph.tokens:
            lines.append(
                "\t".join(
                    [
                        str(t.id),
                        t.form,
                        t.lemma or "_",
                        t.upos or "_",
                        "_",
                        "_",
                        str(t.head),
                        t.deprel or "_",
                        "_",
                        "_",
                    ]
                )
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
