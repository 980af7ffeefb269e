"""Binarization of dependency graphs into s-expression trees.

A dependency graph is rewritten into a binary tree whose internal nodes are
relation labels and whose leaves are the original tokens. At every step the
dependent's subtree goes on the left and the remaining head material on the
right, so modifiers always occupy left children and headwords sit on the
right spine. Which dependent is split off first is decided by the relation
hierarchy: the smaller a relation's level-id, the earlier it is composed and
the closer to the root it ends up.
"""

from importlib import resources

from .conllu import Token, children_of, graph_root

DEFAULT_UNKNOWN_LEVEL = 45

_NOMINAL_UPOS = {"NOUN", "PROPN", "PRON"}


class RelationHierarchy:
    """Relation label -> level-id priority table."""

    def __init__(self, levels, default_level=DEFAULT_UNKNOWN_LEVEL):
        self.levels = dict(levels)
        self.default_level = default_level

    def level(self, label):
        return self.levels.get(label, self.default_level)

    @classmethod
    def from_text(cls, text, default_level=DEFAULT_UNKNOWN_LEVEL):
        levels = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"hierarchy line {lineno}: expected label<TAB>level")
            label, level = parts
            try:
                levels[label] = int(level)
            except ValueError:
                raise ValueError(
                    f"hierarchy line {lineno}: non-integer level {level!r}"
                ) from None
        return cls(levels, default_level)

    @classmethod
    def from_file(cls, path, default_level=DEFAULT_UNKNOWN_LEVEL):
        with open(path, encoding="utf-8") as f:
            return cls.from_text(f.read(), default_level)

    @classmethod
    def default(cls):
        text = resources.files("udpolarity.data").joinpath("hierarchy.tsv").read_text("utf-8")
        return cls.from_text(text)


class BinaryDepTree:
    """Node of a binarized parse: relation label inside, token at a leaf.

    `mark` holds the polarity and is the only slot mutated after
    construction; everything else is fixed when the tree is built.
    """

    __slots__ = ("val", "left", "right", "mark", "parent", "_min_id")

    def __init__(self, val, left=None, right=None):
        self.val = val
        self.left = left
        self.right = right
        self.mark = None
        self.parent = None
        for child in (left, right):
            if child is not None:
                child.parent = self
        if self.is_leaf:
            self._min_id = val.id if isinstance(val, Token) else 0
        else:
            self._min_id = min(left._min_id, right._min_id)

    @property
    def is_leaf(self):
        return self.left is None and self.right is None

    @property
    def label(self):
        return self.val if isinstance(self.val, str) else None

    @property
    def token(self):
        return self.val if isinstance(self.val, Token) else None

    @property
    def min_token_id(self):
        return self._min_id

    def leaves(self):
        if self.is_leaf:
            yield self
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def nodes(self):
        yield self
        if not self.is_leaf:
            yield from self.left.nodes()
            yield from self.right.nodes()

    def head_leaf(self):
        """The lexical head: follow the right spine down to its leaf."""
        node = self
        while not node.is_leaf:
            node = node.right
        return node

    def __repr__(self):
        if self.is_leaf:
            return f"<leaf {self.val.form!r}>"
        return f"<{self.val} ...>"


def refine_relation(deprel, head, dependent, graph):
    """Split `conj` into conj-sent/-vp/-np/-n/-adj/-vb by conjunct shape.

    Non-conj labels pass through untouched.
    """
    if deprel != "conj":
        return deprel
    head_rels = {rel for rel, _ in children_of(graph, head)}
    dep_rels = {rel for rel, _ in children_of(graph, dependent)}
    if "nsubj" in head_rels and "nsubj" in dep_rels:
        return "conj-sent"
    if dep_rels & {"obj", "xcomp", "ccomp"}:
        return "conj-vp"
    if dependent.upos == "VERB":
        return "conj-vb"
    if dependent.upos in _NOMINAL_UPOS:
        return "conj-n"
    if dependent.upos == "ADJ":
        return "conj-adj"
    return "conj-np"


def _subtree_min_id(graph, token):
    lo = token.id
    for _, child in children_of(graph, token):
        lo = min(lo, _subtree_min_id(graph, child))
    return lo


def _refine_sentential(label, head, dependent, graph, root):
    """advcl/advmod attached to the root and spanning the sentence start
    become their sentence-level variants."""
    if label in ("advcl", "advmod") and head.id == root.id:
        if _subtree_min_id(graph, dependent) == 1:
            return label + "-sent"
    return label


def sort_children(children, hierarchy):
    """Order (relation, token) pairs by level-id, ties by token id."""
    return sorted(children, key=lambda rt: (hierarchy.level(rt[0]), rt[1].id))


def binarize(graph, hierarchy=None):
    """Compose a DependencyGraph into a BinaryDepTree.

    For each head, dependents are sorted by hierarchy priority; the
    highest-priority dependent is split off as the left child and the head
    with its remaining dependents is composed as the right child.
    """
    if hierarchy is None:
        hierarchy = RelationHierarchy.default()
    root = graph_root(graph)

    def refined_children(token):
        out = []
        for rel, child in children_of(graph, token):
            label = refine_relation(rel, token, child, graph)
            label = _refine_sentential(label, token, child, graph, root)
            out.append((label, child))
        return out

    def compose(token, remaining):
        if not remaining:
            return BinaryDepTree(token)
        (label, top), rest = remaining[0], remaining[1:]
        left = compose(top, sort_children(refined_children(top), hierarchy))
        right = compose(token, rest)
        return BinaryDepTree(label, left, right)

    return compose(root, sort_children(refined_children(root), hierarchy))


ASCII_MARKS = {None: "", "UP": "^", "DOWN": " v", "FLAT": "="}


def _mark_suffix(mark):
    return ASCII_MARKS[mark.name if mark is not None else None]


def to_sexpression(tree):
    """Render a tree as parenthesized text, children in sentence order.

    Marks, when present, are appended to every item: '^' for monotone,
    ' v' for antitone, '=' for no-information.
    """
    if tree.is_leaf:
        return tree.val.form + _mark_suffix(tree.mark)
    first, second = tree.left, tree.right
    if second.min_token_id < first.min_token_id:
        first, second = second, first
    return "(%s%s %s %s)" % (
        tree.val,
        _mark_suffix(tree.mark),
        to_sexpression(first),
        to_sexpression(second),
    )


class SexprNode:
    """Lightweight node produced by parse_sexpression (labels and marks only)."""

    def __init__(self, label, mark=None, children=None):
        self.label = label
        self.mark = mark
        self.children = children or []

    @property
    def is_leaf(self):
        return not self.children

    def render(self):
        suffix = ASCII_MARKS[self.mark.name if self.mark is not None else None]
        if self.is_leaf:
            return self.label + suffix
        inner = " ".join(c.render() for c in self.children)
        return f"({self.label}{suffix} {inner})"


def parse_sexpression(text):
    """Parse the textual s-expression form back into a SexprNode tree."""
    from .polarity import Polarity

    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def strip_mark(atom):
        if atom.endswith("^"):
            return atom[:-1], Polarity.UP
        if atom.endswith("="):
            return atom[:-1], Polarity.FLAT
        return atom, None

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of s-expression")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens):
                raise ValueError("unexpected end of s-expression")
            label_tok = tokens[pos]
            pos += 1
            label, mark = strip_mark(label_tok)
            if pos < len(tokens) and tokens[pos] == "v":
                mark = Polarity.DOWN
                pos += 1
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(read())
            if pos >= len(tokens):
                raise ValueError("unbalanced '(' in s-expression")
            pos += 1
            return SexprNode(label, mark, children)
        if tok == ")":
            raise ValueError("unbalanced ')' in s-expression")
        label, mark = strip_mark(tok)
        if pos < len(tokens) and tokens[pos] == "v":
            mark = Polarity.DOWN
            pos += 1
        return SexprNode(label, mark)

    node = read()
    if pos != len(tokens):
        raise ValueError("trailing material after s-expression")
    return node
