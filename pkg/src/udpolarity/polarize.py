"""Rule-driven polarization of binarized dependency trees.

Every relation label dispatches to a rule. A rule first hands its own mark
down to both children (monotone when nothing is assigned yet), recurses,
and then applies whatever negation/equalization its relation calls for:

* subject and complement relations recurse into the head side first, so a
  determiner-driven clause flip coming from the dependent side lands on
  marks that already exist;
* clause-modifier relations pin their modifier clause to monotone before
  recursing (inheriting an antitone mark there would double a later
  negation) and then negate or flatten it against the head's mark;
* determiner-family relations look the quantifier phrase up in the lexicon,
  give the head nominal the profile's first-argument mark, and flip or
  flatten everything outside the phrase when the second argument calls for
  it;
* adverbial/case relations let negation operators like "not" or "without"
  negate the constituent they modify, and conditional markers negate the
  antecedent clause they introduce.

Complement relations finally negate their dependent when the governing
predicate is a downward-entailing implicative ("refused to go").
"""

from dataclasses import dataclass

from .binarize import BinaryDepTree
from .lexicon import NUM_WILDCARD, is_downward_operator, load_lexicon
from .polarity import (
    MarkError,
    Polarity,
    equalize_subtree,
    negate_subtree,
    topdown_equalization,
    topdown_negation,
)

SUBJECT_RELATIONS = {"nsubj", "nsubj:pass", "csubj", "csubj:pass"}
COMPLEMENT_RELATIONS = {"obj", "iobj", "xcomp", "ccomp"}
CLAUSE_MOD_RELATIONS = {"acl:relcl", "acl", "advcl", "advcl-sent"}
DETERMINER_RELATIONS = {"det", "det:predet", "nummod"}
ADVERBIAL_RELATIONS = {"advmod", "advmod-sent", "case"}

# upos that terminate the leftward scan for a quantifier phrase
_PHRASE_STOP_UPOS = {"NOUN", "PROPN", "VERB", "AUX", "PUNCT"}
_PHRASE_SCAN_LIMIT = 6


class RuleTable:
    """Relation label -> rule function, with a default for everything else."""

    def __init__(self, rules=None, default=None):
        self.rules = dict(rules) if rules else {}
        self.default = default if default is not None else rule_default

    def lookup(self, label):
        return self.rules.get(label, self.default)


@dataclass
class AnnotatedSentence:
    """Token-level marks plus the fully marked tree behind them."""

    tokens: list  # (Token, Polarity | None) pairs; None = unscored (punct)
    tree: BinaryDepTree
    sent_id: str = ""

    def marks(self):
        return [mark for _tok, mark in self.tokens]


def _inherit(node):
    mark = node.mark if node.mark is not None else Polarity.UP
    node.left.mark = mark
    node.right.mark = mark
    return mark


def _leaf_tokens(node):
    return sorted((leaf.val for leaf in node.leaves()), key=lambda t: t.id)


def _entry_matches(entry, tokens):
    if len(entry) != len(tokens):
        return False
    for part, tok in zip(entry, tokens):
        if part == NUM_WILDCARD:
            if tok.upos != "NUM":
                return False
        elif part != tok.form.lower():
            return False
    return True


def _match_profile(lexicon, tokens):
    for table in (lexicon.quantifiers, lexicon.comparatives):
        for entry, profile in table.items():
            if _entry_matches(entry, tokens):
                return profile
    return None


def _scan_quantifier_phrase(det_node, lexicon, tokens_by_id):
    """Find the quantifier phrase governing a det/nummod node.

    Candidates are the left subtree's tokens plus any contiguous run of
    non-content tokens immediately before them (UD scatters phrases like
    "all of the" over several relations). The longest lexicon entry
    matching a contiguous candidate span wins, provided only function
    material stands between the span and the governed head.
    """
    left_tokens = _leaf_tokens(det_node.left)
    seq = list(left_tokens)
    i = seq[0].id - 1
    while i >= 1 and len(seq) - len(left_tokens) < _PHRASE_SCAN_LIMIT:
        tok = tokens_by_id.get(i)
        if tok is None or tok.upos in _PHRASE_STOP_UPOS:
            break
        seq.insert(0, tok)
        i -= 1
    head_min = det_node.right.min_token_id
    max_len = lexicon.max_phrase_len()
    for anchor in range(len(seq)):
        for span_len in range(min(max_len, len(seq) - anchor), 0, -1):
            span = seq[anchor : anchor + span_len]
            if span[-1].id - span[0].id != span_len - 1:
                continue  # demand surface contiguity
            profile = _match_profile(lexicon, span)
            if profile is None:
                continue
            gap = [
                tokens_by_id[j]
                for j in range(span[-1].id + 1, head_min)
                if j in tokens_by_id
            ]
            if any(t.upos in {"NOUN", "PROPN", "VERB", "AUX", "ADJ", "PUNCT"} for t in gap):
                continue
            covered = {t.id for t in span} | {t.id for t in gap}
            return profile, covered
    return None, set()


_STRING_GLUE = {"of", "the", "a", "an"}


def lookup_determiner(tree_or_word, lexicon=None):
    """Quantifier profile for a determiner word, leaf, or det-node.

    Accepts a plain string ("every", "exactly n", "all of the"), a token or
    leaf, or the determiner-relation node of a binarized tree. Returns None
    when nothing in the lexicon matches.
    """
    if lexicon is None:
        lexicon = load_lexicon()
    if isinstance(tree_or_word, str):
        words = tree_or_word.lower().split()
        words = [NUM_WILDCARD if w == "n" or w.isdigit() else w for w in words]
        for table in (lexicon.quantifiers, lexicon.comparatives):
            if tuple(words) in table:
                return table[tuple(words)]
        # head-initial phrase like "all of the": longest prefix entry with
        # only glue words after it
        for end in range(len(words) - 1, 0, -1):
            key = tuple(words[:end])
            for table in (lexicon.quantifiers, lexicon.comparatives):
                if key in table and all(w in _STRING_GLUE for w in words[end:]):
                    return table[key]
        return None
    if isinstance(tree_or_word, BinaryDepTree):
        if tree_or_word.is_leaf:
            return lexicon.quantifier_by_surface([tree_or_word.val.form])
        node = tree_or_word
        if node.label not in DETERMINER_RELATIONS:
            # treat the argument as the left phrase of its governing node
            node = node.parent if node.parent is not None else node
        root = node
        while root.parent is not None:
            root = root.parent
        tokens_by_id = {leaf.val.id: leaf.val for leaf in root.leaves()}
        profile, _span = _scan_quantifier_phrase(node, lexicon, tokens_by_id)
        return profile
    # a Token
    return lexicon.quantifier_by_surface([tree_or_word.form])


def apply_word_rule(node, lexicon, suppressed=frozenset()):
    """Word-level rule hook for the dependent side of a relation node.

    Negation operators under an adverbial-modifier or case relation negate
    the sibling constituent; a conditional marker under `mark` negates the
    clause it introduces (the antecedent). Returns True when a rule fired.
    """
    parent = node.parent
    if parent is None or node is not parent.left:
        return False
    tokens = _leaf_tokens(node)
    if suppressed and all(t.id in suppressed for t in tokens):
        return False
    label = parent.label
    if label in ADVERBIAL_RELATIONS:
        if lexicon.is_negation_phrase([t.form for t in tokens]):
            negate_subtree(parent.right)
            return True
    if label == "mark":
        head = node.head_leaf().val
        if lexicon.is_conditional(head.form) or lexicon.is_conditional(head.lemma):
            negate_subtree(parent.right)
            return True
    return False


class _Run:
    """One polarization pass over one tree (single-threaded per sentence)."""

    def __init__(self, lexicon, rules):
        self.lexicon = lexicon
        self.rules = rules
        self.tokens_by_id = {}
        self.suppressed = set()

    def polarize(self, tree):
        self.tokens_by_id = {leaf.val.id: leaf.val for leaf in tree.leaves()}
        if tree.mark is None:
            tree.mark = Polarity.UP
        self.visit(tree)
        for node in tree.nodes():
            if node.mark is None:
                raise MarkError("polarization left a node unmarked")
        return tree

    def visit(self, node):
        if node.is_leaf:
            return
        rule = self.rules.lookup(node.val)
        rule(self, node)


def rule_default(run, node):
    """Inherit, recurse dependent side then head side, then react to the
    head's final mark (backward negation / equalization). The reaction
    fires only when the head's mark moved away from the inherited one;
    plain inheritance of an antitone context must not self-trigger."""
    base = _inherit(node)
    run.visit(node.left)
    run.visit(node.right)
    if node.right.mark is not base:
        if node.right.mark is Polarity.DOWN:
            negate_subtree(node.left)
        elif node.right.mark is Polarity.FLAT:
            equalize_subtree(node.left)


def rule_subject(run, node):
    """Subject relations: polarize the predicate first so that clause-level
    flips triggered from the subject land on assigned marks. The backward
    reaction to the predicate's mark is applied to the subject's root mark
    before recursing into it (applying it afterwards would re-flip marks a
    negation quantifier just set)."""
    base = _inherit(node)
    run.visit(node.right)
    if node.right.mark is not base:
        if node.right.mark is Polarity.DOWN:
            node.left.mark = node.left.mark.flipped()
        elif node.right.mark is Polarity.FLAT:
            node.left.mark = Polarity.FLAT
    run.visit(node.left)


def rule_complement(run, node):
    """Object/clausal-complement relations: like subjects, plus the
    downward-implicative check on the governing predicate."""
    base = _inherit(node)
    run.visit(node.right)
    if node.right.mark is not base:
        if node.right.mark is Polarity.DOWN:
            node.left.mark = node.left.mark.flipped()
        elif node.right.mark is Polarity.FLAT:
            node.left.mark = Polarity.FLAT
    run.visit(node.left)
    verb = node.right.head_leaf().val
    if is_downward_operator(verb.lemma or verb.form, run.lexicon):
        negate_subtree(node.left)


def rule_clause_mod(run, node):
    """Relative/adverbial/noun clause modifiers: the modifier clause starts
    monotone regardless of the inherited mark, then is negated or
    flattened according to the modified head's mark."""
    node.right.mark = node.mark if node.mark is not None else Polarity.UP
    node.left.mark = Polarity.UP
    run.visit(node.right)
    run.visit(node.left)
    if node.right.mark is Polarity.DOWN:
        negate_subtree(node.left)
    elif node.right.mark is Polarity.FLAT:
        equalize_subtree(node.left)


def rule_determiner(run, node):
    """det/det:predet/nummod: apply the quantifier profile.

    The governed nominal takes the profile's first-argument mark. A
    second argument of v flips the clause outside the determiner subtree
    (negation-type quantifiers), = flattens it (exact-cardinality); the
    phrase's own words keep the inherited mark. A bare numeral with no
    quantifier reads as "at least n": the numeral flips against its
    context. Anything else defaults to an existential profile.
    """
    node.left.mark = node.mark if node.mark is not None else Polarity.UP
    profile, covered = _scan_quantifier_phrase(node, run.lexicon, run.tokens_by_id)
    if profile is not None:
        run.suppressed |= covered
        node.right.mark = profile.first_arg
        run.visit(node.left)
        run.visit(node.right)
        if node.parent is not None:
            if profile.second_arg is Polarity.DOWN:
                topdown_negation(node, strict=False)
            elif profile.second_arg is Polarity.FLAT:
                topdown_equalization(node, strict=False)
        return
    if node.label == "nummod" and node.left.head_leaf().val.upos == "NUM":
        node.left.mark = node.left.mark.flipped()
        node.right.mark = node.mark if node.mark is not None else Polarity.UP
        run.visit(node.left)
        run.visit(node.right)
        return
    node.right.mark = Polarity.UP  # unknown determiner: existential reading
    run.visit(node.left)
    run.visit(node.right)


def rule_adverbial(run, node):
    """advmod/case: the dependent is polarized after the head material so a
    negation operator ("not", "without", "than") can negate its sibling;
    otherwise the forward reactions to the dependent's mark apply."""
    base = _inherit(node)
    run.visit(node.right)
    run.visit(node.left)
    if apply_word_rule(node.left, run.lexicon, run.suppressed):
        return
    if node.left.mark is not base:
        if node.left.mark is Polarity.DOWN:
            negate_subtree(node.right)
        elif node.left.mark is Polarity.FLAT:
            equalize_subtree(node.right)


def rule_mark(run, node):
    """Clause markers: "if" negates the antecedent clause it introduces."""
    _inherit(node)
    run.visit(node.right)
    run.visit(node.left)
    apply_word_rule(node.left, run.lexicon, run.suppressed)


_STANDARD_RULES = {}
for _rel in SUBJECT_RELATIONS:
    _STANDARD_RULES[_rel] = rule_subject
for _rel in COMPLEMENT_RELATIONS:
    _STANDARD_RULES[_rel] = rule_complement
for _rel in CLAUSE_MOD_RELATIONS:
    _STANDARD_RULES[_rel] = rule_clause_mod
for _rel in DETERMINER_RELATIONS:
    _STANDARD_RULES[_rel] = rule_determiner
for _rel in ADVERBIAL_RELATIONS:
    _STANDARD_RULES[_rel] = rule_adverbial
_STANDARD_RULES["mark"] = rule_mark

DEFAULT_RULES = RuleTable(_STANDARD_RULES, rule_default)


def polarize(tree, lexicon=None, rules=None):
    """Assign a polarity mark to every node of a freshly binarized tree."""
    if lexicon is None:
        lexicon = load_lexicon()
    if rules is None:
        rules = DEFAULT_RULES
    return _Run(lexicon, rules).polarize(tree)


def project_to_tokens(tree, graph):
    """Read the per-token marks off a fully marked tree.

    Punctuation tokens are carried with a None mark (unscored); every other
    token must be marked.
    """
    marks = {}
    for leaf in tree.leaves():
        tok = leaf.val
        if tok.is_punct:
            marks[tok.id] = None
            continue
        if leaf.mark is None:
            raise MarkError(f"token {tok.id} ({tok.form!r}) has no mark")
        marks[tok.id] = leaf.mark
    pairs = [(tok, marks[tok.id]) for tok in graph.tokens]
    return AnnotatedSentence(tokens=pairs, tree=tree, sent_id=graph.sent_id)
