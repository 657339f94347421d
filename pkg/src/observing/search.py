"""Bounded breadth-first exploration of an observed basic system.

A basic system exposes:

``initial()``
    list of (configuration, label) pairs the evolution may start from
``successors(config)``
    list of (configuration, label) pairs reachable in one step
``is_final(config)``
    whether an evolution may stop here
``view(config)``
    the word the observer reads
``size(config)``
    length used by the configuration-length bound
``nonterminals(config)``
    diagnostic count (zero for systems without nonterminals)

Search nodes are (configuration, output-so-far) pairs. Two nodes that
agree on both have identical futures, so only the shallowest arrival is
kept. Deduplicating on configurations alone would be unsound because the
output depends on the path.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BoundsError
from .observer import BOTTOM

FREE = "free"
FILTERED = "bottom_filtered"
MODES = (FREE, FILTERED)


def length_lex(word):
    return (len(word), word)


@dataclass(frozen=True)
class Bounds:
    max_steps: int
    max_form_len: int | None = None
    max_output_len: int | None = None

    def check(self, minimum_steps=1):
        if not isinstance(self.max_steps, int) or self.max_steps < minimum_steps:
            raise BoundsError(f"max_steps must be an integer >= {minimum_steps}")
        for name in ("max_form_len", "max_output_len"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 1):
                raise BoundsError(f"{name} must be a positive integer or None")


@dataclass(frozen=True)
class ObservedLanguage:
    """Deduplicated output words, sorted length-lexicographically.

    ``exhausted`` is true iff no branch was cut by the configuration-length
    or output-length bound, i.e. ``words`` is exact for all evolutions of at
    most ``max_steps`` steps.
    """

    words: tuple
    exhausted: bool
    stats: dict = field(default_factory=dict)

    def __contains__(self, word):
        return word in self.words

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)


@dataclass(frozen=True)
class Found:
    """Membership witness: the labels of the steps that produce the word."""

    witness: tuple

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotFound:
    """No evolution within the bounds observes to the word. Not a disproof."""

    def __bool__(self):
        return False


@dataclass
class _Outcome:
    words: set
    exhausted: bool
    stats: dict
    found: object = None       # (config, output) key of a matching final node
    parents: dict = None


_WORKER = {}


def _init_worker(system, observer):
    _WORKER["system"] = system
    _WORKER["observer"] = observer


def _expand(system, observer, configs):
    out = []
    for config in configs:
        children = []
        for child, label in system.successors(config):
            children.append((child, label, observer(system.view(child))))
        out.append(children)
    return out


def _expand_in_worker(configs):
    return _expand(_WORKER["system"], _WORKER["observer"], configs)


def explore(system, observer, bounds: Bounds, mode=FREE, target=None, jobs=1,
            keep_parents=False) -> _Outcome:
    """Run the layered search.

    With ``target`` set, branches whose output is not a prefix of the
    target are dropped and the search stops at the first final node whose
    output equals the target.

    ``jobs > 1`` expands each layer in a process pool. Results are merged in
    input order, so the outcome does not depend on ``jobs``. Workers only pay
    off when expanding a configuration is costly compared to pickling it.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    filtered = mode == FILTERED or target is not None
    max_form, max_out = bounds.max_form_len, bounds.max_output_len
    if target is not None:
        max_out = len(target) if max_out is None else min(max_out, len(target))

    words = set()
    exhausted = True
    parents = {} if (keep_parents or target is not None) else None
    seen = set()
    stats = {"forms_explored": 0, "max_nonterminals_seen": 0, "max_config_len": 0,
             "step_bound_reached": False}

    def admit(config, output, parent, label):
        """Apply bounds and dedup; return True if the node joins the frontier."""
        nonlocal exhausted
        if filtered and BOTTOM in output:
            return False
        if target is not None and not target.startswith(output):
            return False
        if max_out is not None and len(output) > max_out:
            if target is None:
                exhausted = False
            return False
        if max_form is not None and system.size(config) > max_form:
            exhausted = False
            return False
        key = (config, output)
        if key in seen:
            return False
        seen.add(key)
        if parents is not None:
            parents[key] = (parent, label)
        return True

    frontier = []
    for config, label in system.initial():
        output = observer(system.view(config))
        if admit(config, output, None, label):
            frontier.append((config, output))

    pool = None
    if jobs > 1:
        pool = ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                   initargs=(system, observer))
    try:
        depth = 0
        while frontier:
            for config, output in frontier:
                stats["forms_explored"] += 1
                stats["max_nonterminals_seen"] = max(stats["max_nonterminals_seen"],
                                                     system.nonterminals(config))
                stats["max_config_len"] = max(stats["max_config_len"], system.size(config))
                if system.is_final(config):
                    words.add(output)
                    if target is not None and output == target:
                        return _Outcome(words, exhausted, stats, (config, output), parents)
            if depth == bounds.max_steps:
                stats["step_bound_reached"] = True
                break
            # Successors and their observations depend on the configuration only.
            configs = list(dict.fromkeys(config for config, _ in frontier))
            if pool is None:
                expanded = _expand(system, observer, configs)
            else:
                size = max(1, -(-len(configs) // jobs))
                chunks = [configs[i:i + size] for i in range(0, len(configs), size)]
                expanded = [item for part in pool.map(_expand_in_worker, chunks) for item in part]
            expanded = dict(zip(configs, expanded))
            next_frontier = []
            for config, output in frontier:
                for child, label, symbol in expanded[config]:
                    child_output = output + symbol
                    if admit(child, child_output, (config, output), label):
                        next_frontier.append((child, child_output))
            frontier = next_frontier
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()
    return _Outcome(words, exhausted, stats, None, parents)


def language(outcome: _Outcome) -> ObservedLanguage:
    return ObservedLanguage(tuple(sorted(outcome.words, key=length_lex)),
                            outcome.exhausted, dict(outcome.stats))


def path_to(outcome: _Outcome, key) -> list:
    """Labels along the stored parent chain from an initial node to ``key``."""
    labels = []
    while key is not None:
        parent, label = outcome.parents[key]
        labels.append(label)
        key = parent
    labels.reverse()
    return labels
