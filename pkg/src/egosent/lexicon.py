"""ANP sentiment lexicon and egocentric noun ontology.

The lexicon maps every adjective-noun pair (ANP) to a sentiment value in
[-2, 2]; row order in the lexicon file defines the concept ids used by all
score files.  The ontology regroups the lexicon nouns into a small number
of clusters, each labelled Positive, Neutral or Negative; nouns the
ontology does not cover default to Neutral.
"""

import csv
import enum
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BadPolarity,
    DuplicateAnp,
    DuplicateNoun,
    MalformedRow,
    SentimentOutOfRange,
)
from .fileio import atomic_write_text, sha256_text

SENTIMENT_MIN = -2.0
SENTIMENT_MAX = 2.0


class Polarity(enum.IntEnum):
    NEGATIVE = -1
    NEUTRAL = 0
    POSITIVE = 1

    @classmethod
    def parse(cls, value) -> "Polarity":
        """Coerce an int-like value, raising BadPolarity outside {-1, 0, 1}."""
        try:
            return cls(int(value))
        except (ValueError, TypeError):
            raise BadPolarity(f"polarity label must be -1, 0 or 1, got {value!r}") from None


def normalize_token(raw: str) -> str:
    """Lowercase and underscore-join a token; multiword inputs collapse to one key."""
    return "_".join(raw.strip().lower().split())


@dataclass(frozen=True)
class AnpEntry:
    """One adjective-noun pair with its lexicon sentiment."""

    anp_id: int
    adjective: str
    noun: str
    sentiment_vso: float

    def __post_init__(self):
        for name in ("adjective", "noun"):
            token = getattr(self, name)
            if not token or token != normalize_token(token):
                raise MalformedRow(
                    f"{name} must be a non-empty lowercase token without whitespace, got {token!r}"
                )
        if not SENTIMENT_MIN <= self.sentiment_vso <= SENTIMENT_MAX:
            raise SentimentOutOfRange(
                f"sentiment {self.sentiment_vso} outside [{SENTIMENT_MIN}, {SENTIMENT_MAX}]"
            )


@dataclass(frozen=True)
class AnpLexicon:
    """Ordered ANP vocabulary; the position of an entry equals its anp_id."""

    entries: tuple

    def __post_init__(self):
        for index, entry in enumerate(self.entries):
            if entry.anp_id != index:
                raise MalformedRow(
                    f"entry at position {index} carries anp_id {entry.anp_id}"
                )

    @property
    def vocab_size(self) -> int:
        return len(self.entries)

    def entry(self, anp_id: int) -> AnpEntry:
        return self.entries[anp_id]

    def noun_of(self, anp_id: int) -> str:
        return self.entries[anp_id].noun

    @cached_property
    def nouns(self) -> frozenset:
        return frozenset(entry.noun for entry in self.entries)

    @cached_property
    def content_hash(self) -> str:
        """Hash of the canonical serialization; embedded in score files."""
        return sha256_text(serialize_anp_lexicon(self))


@dataclass(frozen=True)
class OntologyCluster:
    cluster_id: int
    polarity: Polarity
    nouns: frozenset


@dataclass(frozen=True)
class EgoOntology:
    """Noun clusters with ternary polarity labels.

    ``uncovered_nouns`` records lexicon nouns that no cluster claims; they
    are treated as Neutral by :func:`noun_polarity`.
    """

    clusters: tuple
    uncovered_nouns: frozenset = frozenset()

    @cached_property
    def _polarity_by_noun(self) -> dict:
        mapping = {}
        for cluster in self.clusters:
            for noun in cluster.nouns:
                mapping[noun] = cluster.polarity
        return mapping

    def polarity_of(self, noun: str) -> Polarity:
        return self._polarity_by_noun.get(noun, Polarity.NEUTRAL)


def noun_polarity(ontology: EgoOntology, noun: str) -> Polarity:
    """Polarity of the cluster containing ``noun``; Neutral when uncovered."""
    return ontology.polarity_of(noun)


def load_anp_lexicon(path) -> AnpLexicon:
    """Read an ANP lexicon from a headerless TSV (adjective, noun, sentiment).

    Row index defines anp_id.  Raises MalformedRow, SentimentOutOfRange or
    DuplicateAnp with file/line context.
    """
    entries = []
    seen_pairs = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line and lineno > 1:
                continue  # tolerate a trailing blank line only
            columns = line.split("\t")
            if len(columns) != 3:
                raise MalformedRow(f"{path}:{lineno}: expected 3 tab-separated columns, got {len(columns)}")
            adjective = normalize_token(columns[0])
            noun = normalize_token(columns[1])
            try:
                sentiment = float(columns[2])
            except ValueError:
                raise MalformedRow(f"{path}:{lineno}: unparsable sentiment {columns[2]!r}") from None
            pair = (adjective, noun)
            if pair in seen_pairs:
                raise DuplicateAnp(
                    f"{path}:{lineno}: ANP {adjective!r}+{noun!r} already defined on line {seen_pairs[pair]}"
                )
            seen_pairs[pair] = lineno
            try:
                entries.append(AnpEntry(len(entries), adjective, noun, sentiment))
            except (MalformedRow, SentimentOutOfRange) as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from None
    return AnpLexicon(tuple(entries))


def serialize_anp_lexicon(lexicon: AnpLexicon) -> str:
    lines = [
        f"{entry.adjective}\t{entry.noun}\t{entry.sentiment_vso!r}"
        for entry in lexicon.entries
    ]
    return "".join(line + "\n" for line in lines)


def save_anp_lexicon(lexicon: AnpLexicon, path) -> None:
    atomic_write_text(path, serialize_anp_lexicon(lexicon))


ONTOLOGY_HEADER = ["cluster_id", "polarity", "noun"]


def load_ego_ontology(path, lexicon: AnpLexicon) -> EgoOntology:
    """Read the ontology CSV (cluster_id, polarity, noun; one noun per row).

    Every lexicon noun missing from the file lands in ``uncovered_nouns``.
    Raises DuplicateNoun when a noun is claimed twice and BadPolarity for
    labels outside {-1, 0, 1} or clusters labelled inconsistently.
    """
    cluster_polarity = {}
    cluster_nouns = {}
    noun_owner = {}
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != ONTOLOGY_HEADER:
            raise MalformedRow(f"{path}: expected header {','.join(ONTOLOGY_HEADER)!r}, got {header!r}")
        for row in reader:
            lineno = reader.line_num
            if not row:
                continue
            if len(row) != 3:
                raise MalformedRow(f"{path}:{lineno}: expected 3 columns, got {len(row)}")
            try:
                cluster_id = int(row[0])
            except ValueError:
                raise MalformedRow(f"{path}:{lineno}: unparsable cluster_id {row[0]!r}") from None
            try:
                polarity = Polarity.parse(row[1])
            except BadPolarity as exc:
                raise BadPolarity(f"{path}:{lineno}: {exc}") from None
            noun = normalize_token(row[2])
            if not noun:
                raise MalformedRow(f"{path}:{lineno}: empty noun")
            if noun in noun_owner:
                raise DuplicateNoun(
                    f"{path}:{lineno}: noun {noun!r} already in cluster {noun_owner[noun]}"
                )
            noun_owner[noun] = cluster_id
            if cluster_id in cluster_polarity and cluster_polarity[cluster_id] != polarity:
                raise BadPolarity(
                    f"{path}:{lineno}: cluster {cluster_id} labelled both "
                    f"{int(cluster_polarity[cluster_id])} and {int(polarity)}"
                )
            cluster_polarity[cluster_id] = polarity
            cluster_nouns.setdefault(cluster_id, set()).add(noun)
    clusters = tuple(
        OntologyCluster(cid, cluster_polarity[cid], frozenset(cluster_nouns[cid]))
        for cid in sorted(cluster_nouns)
    )
    uncovered = frozenset(lexicon.nouns - set(noun_owner))
    return EgoOntology(clusters, uncovered)


def serialize_ego_ontology(ontology: EgoOntology) -> str:
    rows = []
    for cluster in sorted(ontology.clusters, key=lambda c: c.cluster_id):
        for noun in sorted(cluster.nouns):
            rows.append(f"{cluster.cluster_id},{int(cluster.polarity)},{noun}")
    return ",".join(ONTOLOGY_HEADER) + "\n" + "".join(row + "\n" for row in rows)


def save_ego_ontology(ontology: EgoOntology, path) -> None:
    atomic_write_text(path, serialize_ego_ontology(ontology))
