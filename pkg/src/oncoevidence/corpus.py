"""Abstract records, label schemas, dataset I/O, and PubMed XML parsing.

Everything downstream (filtering, NER, classification) consumes the types
defined here. Datasets are stored as JSONL, one object per line, so files
stay diff-able and appendable; NER data uses the usual two-column
token/tag text format with blank lines between sentences.
"""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import DuplicateKey, MalformedXml, MissingPmid, UnknownLabel

NER_TAGS = ("O", "B-Cancer", "I-Cancer")


class CoarseLabel(Enum):
    IRRELEVANT = "Irrelevant"
    RELEVANT = "Relevant"


class AssociationLabel(Enum):
    """Closed six-class schema for the drug-cancer therapeutic association."""

    NO_RELATION = "NoRelation"
    NO_PHENOTYPIC_OUTCOME = "NoPhenotypicOutcome"
    EFFECTIVE = "Effective"
    DETRIMENTAL = "Detrimental"
    NO_EFFECT = "NoEffect"
    INCONCLUSIVE = "Inconclusive"

    def coarse(self) -> CoarseLabel:
        if self in (AssociationLabel.NO_RELATION, AssociationLabel.NO_PHENOTYPIC_OUTCOME):
            return CoarseLabel.IRRELEVANT
        return CoarseLabel.RELEVANT

    @classmethod
    def parse(cls, value: str, line_no: int | None = None) -> "AssociationLabel":
        try:
            return cls(value)
        except ValueError:
            raise UnknownLabel(value, line_no) from None


class StudyTypeLabel(Enum):
    """Closed four-class schema for the kind of study an abstract reports."""

    PRECLINICAL = "Preclinical"
    CLINICAL_OBSERVATIONAL = "ClinicalObservational"
    CLINICAL_TRIAL = "ClinicalTrial"
    OTHER = "Other"

    @classmethod
    def parse(cls, value: str, line_no: int | None = None) -> "StudyTypeLabel":
        try:
            return cls(value)
        except ValueError:
            raise UnknownLabel(value, line_no) from None


@dataclass(frozen=True)
class AbstractRecord:
    """One PubMed article, reduced to the fields the pipeline consumes."""

    pmid: int
    title: str
    abstract_text: str
    publication_types: tuple[str, ...] = ()
    mesh_terms: tuple[str, ...] = ()
    journal: str | None = None
    year: int | None = None

    def __post_init__(self):
        if self.pmid <= 0:
            raise ValueError(f"pmid must be positive, got {self.pmid}")
        if len(set(self.publication_types)) != len(self.publication_types):
            raise ValueError("duplicate publication types")
        if len(set(self.mesh_terms)) != len(self.mesh_terms):
            raise ValueError("duplicate MeSH terms")

    def to_json(self) -> dict:
        obj = {
            "pmid": self.pmid,
            "title": self.title,
            "abstract": self.abstract_text,
            "pub_types": list(self.publication_types),
            "mesh": list(self.mesh_terms),
        }
        if self.journal is not None:
            obj["journal"] = self.journal
        if self.year is not None:
            obj["year"] = self.year
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "AbstractRecord":
        return cls(
            pmid=int(obj["pmid"]),
            title=obj.get("title", ""),
            abstract_text=obj.get("abstract", ""),
            publication_types=tuple(obj.get("pub_types", ())),
            mesh_terms=tuple(obj.get("mesh", ())),
            journal=obj.get("journal"),
            year=obj.get("year"),
        )


@dataclass(frozen=True)
class AssociationExample:
    """A (drug, cancer) pair grounded in one abstract, with its gold label."""

    pmid: int
    drug: str
    cancer: str
    label: AssociationLabel

    def __post_init__(self):
        if not self.drug or not self.cancer:
            raise ValueError("drug and cancer must be non-empty")

    @property
    def key(self) -> tuple[int, str, str]:
        return (self.pmid, self.drug, self.cancer)


@dataclass(frozen=True)
class StudyTypeExample:
    pmid: int
    label: StudyTypeLabel


@dataclass(frozen=True)
class EvidenceRecord:
    """One unit of pipeline output: what a single abstract says about one
    drug-cancer pair, plus the classifier score distributions."""

    drug: str
    cancer: str
    association: AssociationLabel
    study_type: StudyTypeLabel
    pmid: int
    association_scores: dict = field(default_factory=dict)
    study_scores: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_scores(self.association_scores, self.association.value)
        _check_scores(self.study_scores, self.study_type.value)

    def to_json(self) -> dict:
        return {
            "drug": self.drug,
            "cancer": self.cancer,
            "association": self.association.value,
            "study_type": self.study_type.value,
            "pmid": self.pmid,
            "association_scores": dict(self.association_scores),
            "study_scores": dict(self.study_scores),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EvidenceRecord":
        return cls(
            drug=obj["drug"],
            cancer=obj["cancer"],
            association=AssociationLabel.parse(obj["association"]),
            study_type=StudyTypeLabel.parse(obj["study_type"]),
            pmid=int(obj["pmid"]),
            association_scores=dict(obj["association_scores"]),
            study_scores=dict(obj["study_scores"]),
        )


def _check_scores(scores: dict, label: str) -> None:
    if not scores:
        return
    total = sum(scores.values())
    if abs(total - 1.0) > 1e-6:
        raise ValueError(f"scores sum to {total}, expected 1")
    best = max(scores, key=lambda k: scores[k])
    if best != label:
        raise ValueError(f"stored label {label!r} is not the argmax ({best!r})")


# ---------------------------------------------------------------------------
# PubMed EFetch XML


def parse_pubmed_xml(xml_bytes: bytes) -> list[AbstractRecord]:
    """Parse a PubmedArticleSet document into AbstractRecords.

    Structured abstracts are flattened: every AbstractText section is
    joined with a single space in document order and section labels are
    dropped. Articles without an abstract are kept with empty text; the
    shallow filter, not the parser, decides whether they are usable.
    """
    try:
        root = ET.fromstring(xml_bytes)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from None

    records = []
    for article in root.iter("PubmedArticle"):
        pmid_el = article.find("MedlineCitation/PMID")
        if pmid_el is None:
            pmid_el = article.find(".//PMID")
        if pmid_el is None or not (pmid_el.text or "").strip():
            raise MissingPmid("PubmedArticle without a PMID element")
        pmid = int(pmid_el.text.strip())

        title_el = article.find(".//ArticleTitle")
        title = _element_text(title_el)

        sections = [_element_text(el) for el in article.findall(".//Abstract/AbstractText")]
        abstract = " ".join(s for s in sections if s)

        pub_types = _unique(
            _element_text(el) for el in article.findall(".//PublicationTypeList/PublicationType")
        )
        mesh = _unique(
            _element_text(el) for el in article.findall(".//MeshHeading/DescriptorName")
        )

        journal = _element_text(article.find(".//Journal/Title")) or None
        year_el = article.find(".//JournalIssue/PubDate/Year")
        year = None
        if year_el is not None and (year_el.text or "").strip().isdigit():
            year = int(year_el.text.strip())

        records.append(
            AbstractRecord(
                pmid=pmid,
                title=title,
                abstract_text=abstract,
                publication_types=pub_types,
                mesh_terms=mesh,
                journal=journal,
                year=year,
            )
        )
    return records


def _element_text(el: ET.Element | None) -> str:
    if el is None:
        return ""
    return "".join(el.itertext()).strip()


def _unique(items: Iterable[str]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for item in items:
        if item and item not in seen:
            seen[item] = None
    return tuple(seen)


# ---------------------------------------------------------------------------
# JSONL dataset I/O


def save_abstracts(records: Iterable[AbstractRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_json(), ensure_ascii=False) + "\n")


def load_abstracts(path: str | Path) -> list[AbstractRecord]:
    return [AbstractRecord.from_json(obj) for obj in _iter_jsonl(path)]


def load_association_dataset(path: str | Path) -> list[AssociationExample]:
    """Load (pmid, drug, cancer, label) examples; the (pmid, drug, cancer)
    triple must be unique across the file."""
    examples = []
    seen: set[tuple[int, str, str]] = set()
    for line_no, obj in _iter_jsonl(path, numbered=True):
        ex = AssociationExample(
            pmid=int(obj["pmid"]),
            drug=obj["drug"],
            cancer=obj["cancer"],
            label=AssociationLabel.parse(obj["label"], line_no),
        )
        if ex.key in seen:
            raise DuplicateKey(ex.key, line_no)
        seen.add(ex.key)
        examples.append(ex)
    return examples


def save_association_dataset(examples: Iterable[AssociationExample], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for ex in examples:
            obj = {"pmid": ex.pmid, "drug": ex.drug, "cancer": ex.cancer, "label": ex.label.value}
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


def load_studytype_dataset(path: str | Path) -> list[StudyTypeExample]:
    examples = []
    seen: set[int] = set()
    for line_no, obj in _iter_jsonl(path, numbered=True):
        pmid = int(obj["pmid"])
        if pmid in seen:
            raise DuplicateKey(pmid, line_no)
        seen.add(pmid)
        examples.append(StudyTypeExample(pmid=pmid, label=StudyTypeLabel.parse(obj["label"], line_no)))
    return examples


def load_ner_dataset(path: str | Path) -> list[tuple[list[str], list[str]]]:
    """Read two-column token/tag sentences separated by blank lines.

    Tags must come from the closed {O, B-Cancer, I-Cancer} set.
    """
    sentences: list[tuple[list[str], list[str]]] = []
    tokens: list[str] = []
    tags: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                if tokens:
                    sentences.append((tokens, tags))
                    tokens, tags = [], []
                continue
            parts = line.split()
            if len(parts) != 2:
                raise UnknownLabel(line, line_no)
            token, tag = parts
            if tag not in NER_TAGS:
                raise UnknownLabel(tag, line_no)
            tokens.append(token)
            tags.append(tag)
    if tokens:
        sentences.append((tokens, tags))
    return sentences


def _iter_jsonl(path: str | Path, numbered: bool = False):
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            obj = json.loads(line)
            yield (line_no, obj) if numbered else obj


# ---------------------------------------------------------------------------
# Dataset statistics


@dataclass(frozen=True)
class DatasetStats:
    per_label: dict
    per_coarse: dict

    @property
    def total(self) -> int:
        return sum(self.per_label.values())


def dataset_stats(examples: Iterable[AssociationExample]) -> DatasetStats:
    """Count examples per association label plus Irrelevant/Relevant totals."""
    per_label = {label: 0 for label in AssociationLabel}
    for ex in examples:
        per_label[ex.label] += 1
    per_coarse = {coarse: 0 for coarse in CoarseLabel}
    for label, count in per_label.items():
        per_coarse[label.coarse()] += count
    return DatasetStats(per_label=per_label, per_coarse=per_coarse)
