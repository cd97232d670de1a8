"""PubMed search string construction.

One query per drug, AND-ing three OR-groups: the drug and its synonyms,
cancer terms, and study-design terms. The default term lists live in
plain-text resource files so they can be tuned without touching code;
they are a working substitute for, not a reproduction of, any published
search strategy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import EmptyTermList

_RESOURCES = resources.files("oncoevidence") / "resources"


def load_terms(path: str | Path) -> list[str]:
    """Read one term per line; blank lines and '#' comments are skipped."""
    terms = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            terms.append(line)
    return terms


def default_cancer_terms() -> list[str]:
    return load_terms(_RESOURCES / "terms_cancer.txt")


def default_design_terms() -> list[str]:
    return load_terms(_RESOURCES / "terms_design.txt")


@dataclass(frozen=True)
class QuerySpec:
    drug: str
    synonyms: tuple[str, ...] = ()
    cancer_terms: tuple[str, ...] = field(default_factory=lambda: tuple(default_cancer_terms()))
    design_terms: tuple[str, ...] = field(default_factory=lambda: tuple(default_design_terms()))
    field_tag: str = "tiab"

    def __post_init__(self):
        if not self.drug:
            raise ValueError("drug must be non-empty")
        for name, terms in (
            ("synonyms", self.synonyms),
            ("cancer_terms", self.cancer_terms),
            ("design_terms", self.design_terms),
        ):
            if any(not t for t in terms):
                raise ValueError(f"{name} contains an empty string")
            if len(set(terms)) != len(terms):
                raise ValueError(f"{name} contains duplicates")


def build_query(spec: QuerySpec) -> str:
    """Render the spec as '(<drug group>) AND (<cancer group>) AND (<design group>)'.

    Every term is double-quoted, tagged with the spec's field tag, and
    emitted in input order, so equal specs always produce equal strings.
    """
    drug_terms = (spec.drug,) + spec.synonyms
    groups = [drug_terms, spec.cancer_terms, spec.design_terms]
    if any(not g for g in groups):
        raise EmptyTermList("drug, cancer, and design groups must each have at least one term")
    rendered = [
        " OR ".join(f'"{term}"[{spec.field_tag}]' for term in group) for group in groups
    ]
    return "({}) AND ({}) AND ({})".format(*rendered)
