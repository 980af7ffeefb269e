"""Three-valued polarity marks and the tree operators built on them.

The mark vocabulary is monotone (UP, rendered ^/↑), antitone (DOWN,
rendered v/↓) and no-information (FLAT, rendered =). Negation swaps UP and
DOWN and leaves FLAT alone: a directionless mark has nothing to flip.
Equalization forces FLAT everywhere and absorbs later negations.

The backward/forward operators read one child's mark and rewrite the
sibling subtree; top-down negation rewrites everything under a node's
parent except the triggering subtree itself. All of them mutate marks in
place and touch nothing else.
"""

import enum


class Polarity(enum.Enum):
    UP = "↑"
    DOWN = "↓"
    FLAT = "="

    def flipped(self):
        if self is Polarity.UP:
            return Polarity.DOWN
        if self is Polarity.DOWN:
            return Polarity.UP
        return self

    @property
    def pretty(self):
        return self.value

    @property
    def ascii(self):
        return {"UP": "^", "DOWN": "v", "FLAT": "="}[self.name]

    @classmethod
    def from_symbol(cls, sym):
        table = {
            "↑": cls.UP, "^": cls.UP, "up": cls.UP,
            "↓": cls.DOWN, "v": cls.DOWN, "down": cls.DOWN,
            "=": cls.FLAT, "flat": cls.FLAT, "none": cls.FLAT,
        }
        key = sym.strip().lower() if len(sym) > 1 else sym
        if key not in table:
            raise ValueError(f"unknown polarity symbol {sym!r}")
        return table[key]


class MarkError(Exception):
    """An operator met a node whose mark should have been assigned."""


def negate_subtree(tree):
    """Flip UP<->DOWN on every node of the subtree; FLAT stays put."""
    for node in tree.nodes():
        if node.mark is None:
            raise MarkError("negation over a subtree with an unassigned mark")
        node.mark = node.mark.flipped()


def equalize_subtree(tree):
    """Set every node of the subtree to FLAT."""
    for node in tree.nodes():
        node.mark = Polarity.FLAT


def backward_negation(tree):
    """If the right child is DOWN, negate the left subtree."""
    if tree.right.mark is Polarity.DOWN:
        negate_subtree(tree.left)


def backward_equalization(tree):
    """If the right child is FLAT, equalize the left subtree."""
    if tree.right.mark is Polarity.FLAT:
        equalize_subtree(tree.left)


def forward_negation(tree):
    """If the left child is DOWN, negate the right subtree."""
    if tree.left.mark is Polarity.DOWN:
        negate_subtree(tree.right)


def forward_equalization(tree):
    """If the left child is FLAT, equalize the right subtree."""
    if tree.left.mark is Polarity.FLAT:
        equalize_subtree(tree.right)


def _scope_excluding(parent, excluded):
    yield parent
    stack = [c for c in (parent.left, parent.right) if c is not None and c is not excluded]
    while stack:
        node = stack.pop()
        if node is excluded:
            continue
        yield node
        for child in (node.left, node.right):
            if child is not None and child is not excluded:
                stack.append(child)


def topdown_negation(tree, strict=True):
    """Flip every mark under (and including) the parent, except this subtree.

    With strict=True an unassigned mark in scope is an error; the lenient
    form skips such nodes, which later inherit the flipped mark of their
    nearest processed ancestor anyway.
    """
    if tree.parent is None:
        raise MarkError("top-down negation at the root has nothing to negate")
    for node in _scope_excluding(tree.parent, tree):
        if node.mark is None:
            if strict:
                raise MarkError("top-down negation over an unassigned mark")
            continue
        node.mark = node.mark.flipped()


def topdown_equalization(tree, strict=True):
    """FLAT-out every mark under the parent except this subtree.

    Companion of topdown_negation for no-information contexts (e.g. an
    exact-cardinality quantifier flattening its clause).
    """
    if tree.parent is None:
        raise MarkError("top-down equalization at the root has nothing to equalize")
    for node in _scope_excluding(tree.parent, tree):
        if node.mark is None and strict:
            raise MarkError("top-down equalization over an unassigned mark")
        node.mark = Polarity.FLAT
