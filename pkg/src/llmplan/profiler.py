"""Corpus profiling: stream a directory tree of text files and measure
bytes, words, tokens, the tokens-per-GB density, and exact-duplicate
documents.

Files are read once in chunks regardless of counting method (word counts
are method-independent), so content digests for duplicate detection come
from the same pass. Per-file failures are recorded and skipped, never
fatal.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .bpe import StreamingTokenCounter, TokenizerModel
from .scaling import BYTES_PER_GB, DEFAULT_CONSTANTS, CalibrationConstants

_CHUNK_SIZE = 1 << 20
_WHITESPACE = frozenset(b" \t\n\r\x0b\x0c")


class CountingMethodKind(str, Enum):
    EXACT_BPE = "exact_bpe"
    WORD_HEURISTIC = "word_heuristic"
    BYTE_RATIO = "byte_ratio"


@dataclass(frozen=True)
class CountingMethod:
    """How token counts are obtained.

    exact_bpe runs the loaded tokenizer over every byte; word_heuristic
    divides the word count by the words-per-token calibration (0.75);
    byte_ratio multiplies total decimal GB by an assumed density.
    """

    kind: CountingMethodKind
    model: TokenizerModel | None = None
    ratio: float | None = None

    def __post_init__(self) -> None:
        if self.kind is CountingMethodKind.EXACT_BPE and self.model is None:
            raise ValueError("exact_bpe counting needs a tokenizer model")
        if self.kind is CountingMethodKind.BYTE_RATIO:
            if self.ratio is None or self.ratio <= 0:
                raise ValueError(f"byte_ratio needs a positive ratio, got {self.ratio!r}")

    @classmethod
    def exact_bpe(cls, model: TokenizerModel) -> "CountingMethod":
        return cls(CountingMethodKind.EXACT_BPE, model=model)

    @classmethod
    def word_heuristic(cls) -> "CountingMethod":
        return cls(CountingMethodKind.WORD_HEURISTIC)

    @classmethod
    def byte_ratio(cls, ratio: float) -> "CountingMethod":
        return cls(CountingMethodKind.BYTE_RATIO, ratio=ratio)


@dataclass(frozen=True)
class CorpusStats:
    file_count: int
    total_bytes: int
    token_count: float
    word_count: int
    duplicate_doc_count: int
    skipped_files: tuple[tuple[str, str], ...]
    method: CountingMethodKind


@dataclass(frozen=True)
class _FileRecord:
    path: str
    size: int
    words: int
    tokens: int | None
    digest: bytes


def _scan_file(path: str, model: TokenizerModel | None) -> _FileRecord:
    size = 0
    words = 0
    in_word = False
    digest = hashlib.blake2b(digest_size=16)
    counter = StreamingTokenCounter(model) if model is not None else None
    with open(path, "rb") as handle:
        while True:
            chunk = handle.read(_CHUNK_SIZE)
            if not chunk:
                break
            size += len(chunk)
            digest.update(chunk)
            if counter is not None:
                counter.update(chunk)
            for byte in chunk:
                if byte in _WHITESPACE:
                    in_word = False
                elif not in_word:
                    in_word = True
                    words += 1
    tokens = counter.finish() if counter is not None else None
    return _FileRecord(path, size, words, tokens, digest.digest())


def iter_corpus_files(root: str, follow_symlinks: bool = False) -> Iterator[str]:
    """Regular files under `root` in deterministic lexicographic order.

    Hidden files are included; symlinks are skipped unless the flag is set,
    in which case directory loops are broken with a visited-inode set.
    """
    if not os.path.isdir(root):
        raise NotADirectoryError(f"corpus root is not a readable directory: {root}")
    visited: set[tuple[int, int]] = set()
    if follow_symlinks:
        stat = os.stat(root)
        visited.add((stat.st_dev, stat.st_ino))

    def walk(directory: str) -> Iterator[str]:
        with os.scandir(directory) as entries:
            children = sorted(entries, key=lambda e: e.name)
        for entry in children:
            if entry.is_symlink() and not follow_symlinks:
                continue
            if entry.is_dir(follow_symlinks=follow_symlinks):
                if follow_symlinks:
                    stat = entry.stat(follow_symlinks=True)
                    key = (stat.st_dev, stat.st_ino)
                    if key in visited:
                        continue
                    visited.add(key)
                yield from walk(entry.path)
            elif entry.is_file(follow_symlinks=follow_symlinks):
                yield entry.path

    yield from walk(root)


def _scan_corpus(
    root: str,
    model: TokenizerModel | None,
    follow_symlinks: bool,
    workers: int,
) -> tuple[list[_FileRecord], list[tuple[str, str]]]:
    paths = list(iter_corpus_files(root, follow_symlinks))
    skipped: list[tuple[str, str]] = []
    records: list[_FileRecord] = []

    def scan(path: str) -> _FileRecord | tuple[str, str]:
        try:
            return _scan_file(path, model)
        except OSError as exc:
            return (path, str(exc))

    if workers > 1 and len(paths) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(scan, paths))
    else:
        results = [scan(path) for path in paths]

    for result in results:
        if isinstance(result, _FileRecord):
            records.append(result)
        else:
            skipped.append(result)
    return records, skipped


def _duplicate_groups(records: list[_FileRecord]) -> tuple[int, int]:
    by_digest: dict[bytes, list[_FileRecord]] = {}
    for record in records:
        by_digest.setdefault(record.digest, []).append(record)
    dup_count = 0
    dup_bytes = 0
    for group in by_digest.values():
        extras = len(group) - 1
        if extras > 0:
            dup_count += extras
            dup_bytes += extras * group[0].size
    return dup_count, dup_bytes


def profile_corpus(
    root: str,
    method: CountingMethod,
    follow_symlinks: bool = False,
    workers: int = 1,
    constants: CalibrationConstants = DEFAULT_CONSTANTS,
) -> CorpusStats:
    """Profile every regular file under `root`.

    total_bytes is the sum of logical file sizes (bytes read, not block
    allocation); a word is a maximal run of non-whitespace bytes; token
    counts follow `method`. Unreadable files are recorded in skipped_files.
    Results are independent of the worker count.
    """
    bpe_model = method.model if method.kind is CountingMethodKind.EXACT_BPE else None
    records, skipped = _scan_corpus(root, bpe_model, follow_symlinks, workers)

    total_bytes = sum(record.size for record in records)
    word_count = sum(record.words for record in records)
    if method.kind is CountingMethodKind.EXACT_BPE:
        token_count = float(sum(record.tokens or 0 for record in records))
    elif method.kind is CountingMethodKind.WORD_HEURISTIC:
        token_count = word_heuristic_tokens(word_count, constants)
    else:
        assert method.ratio is not None
        token_count = (total_bytes / BYTES_PER_GB) * method.ratio
    duplicate_doc_count, _ = _duplicate_groups(records)

    return CorpusStats(
        file_count=len(records),
        total_bytes=total_bytes,
        token_count=token_count,
        word_count=word_count,
        duplicate_doc_count=duplicate_doc_count,
        skipped_files=tuple(skipped),
        method=method.kind,
    )


def tokens_per_gb(stats: CorpusStats) -> float:
    """Measured token density: tokens divided by decimal GB on disk."""
    if stats.total_bytes <= 0:
        raise ValueError("tokens-per-GB is undefined for an empty corpus")
    return stats.token_count / (stats.total_bytes / BYTES_PER_GB)


def word_heuristic_tokens(
    word_count: int, constants: CalibrationConstants = DEFAULT_CONSTANTS
) -> float:
    """Approximate token count from a word count (one token ~ 0.75 words)."""
    if word_count < 0:
        raise ValueError(f"word count must be non-negative, got {word_count!r}")
    return word_count / constants.words_per_token


def duplicate_stats(
    root: str, follow_symlinks: bool = False, workers: int = 1
) -> tuple[int, int]:
    """(duplicate_doc_count, duplicate_bytes) under `root`.

    Files are grouped by a 128-bit content digest; each group of n
    byte-identical files contributes n-1 duplicates and n-1 times its file
    size in redundant bytes.
    """
    records, _ = _scan_corpus(root, None, follow_symlinks, workers)
    return _duplicate_groups(records)
