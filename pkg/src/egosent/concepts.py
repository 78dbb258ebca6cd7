"""Per-image semantic-concept scores and top-k selection.

Score files are JSON lines: a header object carrying the lexicon hash and
vocabulary size, then one object per image with a sparse ``[[anp_id,
probability], ...]`` list.  Zero-probability entries are dropped on load
since they can never enter a top-k.
"""

import json
from dataclasses import dataclass

from .errors import (
    LexiconMismatch,
    MalformedRow,
    ProbabilityOutOfRange,
    UnknownAnpId,
)
from .fileio import atomic_write_text
from .lexicon import AnpLexicon


@dataclass(frozen=True)
class ImageRecord:
    """One photostream frame: sparse map anp_id -> probability."""

    image_id: str
    timestamp: int
    scores: dict

    def nonzero_count(self) -> int:
        return sum(1 for p in self.scores.values() if p > 0.0)


@dataclass(frozen=True)
class PhotoStream:
    """Time-ordered, non-empty sequence of image records."""

    images: tuple
    lexicon_hash: str

    def __post_init__(self):
        if not self.images:
            raise ValueError("a PhotoStream must contain at least one image")
        keys = [(img.timestamp, img.image_id) for img in self.images]
        if keys != sorted(keys):
            raise ValueError("PhotoStream images must be sorted by (timestamp, image_id)")

    def index_of(self, image_id: str) -> int:
        return self._positions[image_id]

    @property
    def _positions(self) -> dict:
        cached = self.__dict__.get("_positions_cache")
        if cached is None:
            cached = {img.image_id: i for i, img in enumerate(self.images)}
            self.__dict__["_positions_cache"] = cached
        return cached


@dataclass(frozen=True)
class ScoredConcept:
    anp_id: int
    probability: float
    source_image: str


def _validate_score(anp_id, probability, vocab_size, context):
    if not isinstance(anp_id, int) or isinstance(anp_id, bool):
        raise MalformedRow(f"{context}: anp_id must be an integer, got {anp_id!r}")
    if not 0 <= anp_id < vocab_size:
        raise UnknownAnpId(f"{context}: anp_id {anp_id} outside [0, {vocab_size})")
    if not isinstance(probability, (int, float)) or isinstance(probability, bool):
        raise MalformedRow(f"{context}: probability must be a number, got {probability!r}")
    if not 0.0 <= probability <= 1.0:
        raise ProbabilityOutOfRange(f"{context}: probability {probability} outside [0, 1]")


def load_concept_scores(path, lexicon: AnpLexicon) -> PhotoStream:
    """Read a concept-score JSONL file validated against ``lexicon``.

    Images are re-sorted by (timestamp, image_id).  Raises LexiconMismatch
    when the file header does not match the lexicon, UnknownAnpId and
    ProbabilityOutOfRange for bad score entries.
    """
    images = []
    seen_ids = set()
    with open(path, "r", encoding="utf-8") as handle:
        header_line = handle.readline()
        try:
            header = json.loads(header_line)
        except json.JSONDecodeError:
            raise MalformedRow(f"{path}:1: unparsable header line") from None
        if not isinstance(header, dict) or "lexicon_hash" not in header or "vocab_size" not in header:
            raise MalformedRow(f"{path}:1: header must carry lexicon_hash and vocab_size")
        if header["vocab_size"] != lexicon.vocab_size:
            raise LexiconMismatch(
                f"{path}: file vocab_size {header['vocab_size']} != lexicon {lexicon.vocab_size}"
            )
        if header["lexicon_hash"] != lexicon.content_hash:
            raise LexiconMismatch(f"{path}: score file was built against a different lexicon")
        for lineno, line in enumerate(handle, start=2):
            line = line.strip()
            if not line:
                continue
            context = f"{path}:{lineno}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                raise MalformedRow(f"{context}: unparsable JSON") from None
            try:
                image_id = record["image_id"]
                timestamp = record["timestamp"]
                pairs = record["scores"]
            except (KeyError, TypeError):
                raise MalformedRow(f"{context}: record needs image_id, timestamp and scores") from None
            if not isinstance(image_id, str) or not image_id:
                raise MalformedRow(f"{context}: image_id must be a non-empty string")
            if not isinstance(timestamp, int) or isinstance(timestamp, bool):
                raise MalformedRow(f"{context}: timestamp must be an integer")
            if image_id in seen_ids:
                raise MalformedRow(f"{context}: duplicate image_id {image_id!r}")
            seen_ids.add(image_id)
            scores = {}
            for pair in pairs:
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise MalformedRow(f"{context}: each score entry must be [anp_id, probability]")
                anp_id, probability = pair
                _validate_score(anp_id, probability, lexicon.vocab_size, context)
                if anp_id in scores:
                    raise MalformedRow(f"{context}: duplicate anp_id {anp_id}")
                if probability > 0.0:
                    scores[anp_id] = float(probability)
            images.append(ImageRecord(image_id, timestamp, scores))
    images.sort(key=lambda img: (img.timestamp, img.image_id))
    return PhotoStream(tuple(images), lexicon.content_hash)


def serialize_concept_scores(stream: PhotoStream, vocab_size: int) -> str:
    lines = [json.dumps({"lexicon_hash": stream.lexicon_hash, "vocab_size": vocab_size})]
    for image in stream.images:
        pairs = [[anp_id, image.scores[anp_id]] for anp_id in sorted(image.scores)]
        lines.append(
            json.dumps(
                {"image_id": image.image_id, "timestamp": image.timestamp, "scores": pairs}
            )
        )
    return "".join(line + "\n" for line in lines)


def save_concept_scores(stream: PhotoStream, vocab_size: int, path) -> None:
    atomic_write_text(path, serialize_concept_scores(stream, vocab_size))


def import_dense_csv(path, lexicon: AnpLexicon) -> PhotoStream:
    """Convert a dense score CSV (image_id, timestamp, p0..p{V-1}) to a stream."""
    vocab = lexicon.vocab_size
    images = []
    seen_ids = set()
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            columns = line.split(",")
            if len(columns) != 2 + vocab:
                raise MalformedRow(
                    f"{path}:{lineno}: expected {2 + vocab} columns, got {len(columns)}"
                )
            image_id = columns[0]
            if not image_id:
                raise MalformedRow(f"{path}:{lineno}: empty image_id")
            if image_id in seen_ids:
                raise MalformedRow(f"{path}:{lineno}: duplicate image_id {image_id!r}")
            seen_ids.add(image_id)
            try:
                timestamp = int(columns[1])
            except ValueError:
                raise MalformedRow(f"{path}:{lineno}: unparsable timestamp {columns[1]!r}") from None
            scores = {}
            for anp_id, cell in enumerate(columns[2:]):
                try:
                    probability = float(cell)
                except ValueError:
                    raise MalformedRow(f"{path}:{lineno}: unparsable probability {cell!r}") from None
                _validate_score(anp_id, probability, vocab, f"{path}:{lineno}")
                if probability > 0.0:
                    scores[anp_id] = probability
            images.append(ImageRecord(image_id, timestamp, scores))
    images.sort(key=lambda img: (img.timestamp, img.image_id))
    return PhotoStream(tuple(images), lexicon.content_hash)


def top_k(image: ImageRecord, k: int) -> list:
    """The min(k, nonzero) highest-probability concepts of one image.

    Sorted by descending probability; равные probabilities break by
    ascending anp_id so the ranking is stable across platforms.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(
        (item for item in image.scores.items() if item[1] > 0.0),
        key=lambda item: (-item[1], item[0]),
    )
    return [
        ScoredConcept(anp_id, probability, image.image_id)
        for anp_id, probability in ranked[:k]
    ]


def event_concept_pool(event, k: int) -> list:
    """Concatenated top-k concepts over an event's images, in image order."""
    pool = []
    for image in event.images:
        pool.extend(top_k(image, k))
    return pool
