"""Byte-level BPE tokenizer for exact corpus token counting.

Loads any published vocab/merges pair (GPT-2 style byte-escaped JSON vocab
plus a ranked merges text file), splits raw bytes into pretokens with a
deterministic table-driven scanner, applies merges lowest rank first, and
counts tokens over byte streams of arbitrary chunking. Every byte sequence
is encodable: all 256 single-byte tokens are required base vocabulary.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Sequence


class TokenizerLoadError(ValueError):
    """Vocabulary or merges data violates the tokenizer model invariants."""


def byte_vocabulary() -> dict[bytes, int]:
    """The degenerate base vocabulary: one token per byte value, id = byte."""
    return {bytes([b]): b for b in range(256)}


def gpt2_byte_encoder() -> dict[int, str]:
    """Byte -> printable-unicode escape table used by GPT-2 style vocab files.

    Printable ASCII and two Latin-1 ranges map to themselves; the remaining
    68 byte values map to U+0100 and up, so every token is a readable string.
    """
    keep = (
        list(range(ord("!"), ord("~") + 1))
        + list(range(0xA1, 0xAC + 1))
        + list(range(0xAE, 0xFF + 1))
    )
    mapping = {b: chr(b) for b in keep}
    bump = 0
    for b in range(256):
        if b not in mapping:
            mapping[b] = chr(256 + bump)
            bump += 1
    return mapping


def gpt2_byte_decoder() -> dict[str, int]:
    return {ch: b for b, ch in gpt2_byte_encoder().items()}


def token_string_to_bytes(token: str, decoder: dict[str, int] | None = None) -> bytes:
    """Decode one escaped token string from a vocab/merges file to raw bytes."""
    decoder = decoder if decoder is not None else gpt2_byte_decoder()
    try:
        return bytes(decoder[ch] for ch in token)
    except KeyError as exc:
        raise TokenizerLoadError(
            f"token {token!r} contains character {exc.args[0]!r} outside the "
            "byte-escape alphabet"
        ) from None


def bytes_to_token_string(data: bytes, encoder: dict[int, str] | None = None) -> str:
    """Inverse of token_string_to_bytes, for writing fixture files."""
    encoder = encoder if encoder is not None else gpt2_byte_encoder()
    return "".join(encoder[b] for b in data)


class TokenizerModel:
    """Immutable byte-level BPE definition: vocabulary plus ranked merges.

    Invariants checked at construction: ids are unique and contiguous from
    0; every single byte value is a base token; every merge's left side,
    right side and concatenation are in the vocabulary; no duplicate merge
    pairs. Instances are safe to share across threads.
    """

    __slots__ = ("token_ids", "merges", "_ranks", "_tokens_by_id")

    def __init__(
        self,
        token_ids: dict[bytes, int],
        merges: Sequence[tuple[bytes, bytes]] = (),
    ):
        ids = sorted(token_ids.values())
        if len(set(ids)) != len(ids):
            seen: set[int] = set()
            dupes = sorted({i for i in ids if i in seen or seen.add(i)})
            raise TokenizerLoadError(f"duplicate token ids: {dupes[:5]}")
        if ids != list(range(len(ids))):
            raise TokenizerLoadError(
                f"token ids must be contiguous from 0, got range "
                f"[{ids[0]}, {ids[-1]}] over {len(ids)} tokens"
            )
        for b in range(256):
            if bytes([b]) not in token_ids:
                raise TokenizerLoadError(f"missing base token for byte 0x{b:02x}")
        ranks: dict[tuple[bytes, bytes], int] = {}
        for rank, pair in enumerate(merges):
            left, right = pair
            if pair in ranks:
                raise TokenizerLoadError(f"duplicate merge pair {pair!r} at rank {rank}")
            for part, side in ((left, "left"), (right, "right"), (left + right, "merged")):
                if part not in token_ids:
                    raise TokenizerLoadError(
                        f"merge rank {rank} ({left!r}, {right!r}): {side} token "
                        f"{part!r} is not in the vocabulary"
                    )
            ranks[pair] = rank
        self.token_ids = dict(token_ids)
        self.merges = tuple(tuple(pair) for pair in merges)
        self._ranks = ranks
        tokens_by_id = [b""] * len(token_ids)
        for token, token_id in token_ids.items():
            tokens_by_id[token_id] = token
        self._tokens_by_id = tuple(tokens_by_id)

    @property
    def vocab_size(self) -> int:
        return len(self.token_ids)

    def merge_pretoken(self, pretoken: bytes) -> list[bytes]:
        """Apply merges to one pretoken: repeatedly merge the adjacent pair
        with the lowest rank (leftmost occurrence) until none remains."""
        parts = [pretoken[i : i + 1] for i in range(len(pretoken))]
        ranks = self._ranks
        while len(parts) > 1:
            best_rank = None
            best_at = -1
            for i in range(len(parts) - 1):
                rank = ranks.get((parts[i], parts[i + 1]))
                if rank is not None and (best_rank is None or rank < best_rank):
                    best_rank, best_at = rank, i
            if best_rank is None:
                break
            parts[best_at : best_at + 2] = [parts[best_at] + parts[best_at + 1]]
        return parts


# Pretokenizer byte classes. A pretoken is (i) an optional space plus a
# maximal alphanumeric run, (ii) an optional space plus a maximal
# other-byte run, or (iii) a maximal whitespace run that keeps its final
# space out when that space prefixes a following (i)/(ii) run. Merges
# never cross pretoken boundaries, and concatenating the pretokens
# reproduces the input bytes exactly.
_ALNUM, _SPACE, _WS, _OTHER = 0, 1, 2, 3


def _byte_classes() -> list[int]:
    classes = [_OTHER] * 256
    for b in b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz":
        classes[b] = _ALNUM
    classes[0x20] = _SPACE
    for b in b"\t\n\x0b\x0c\r":
        classes[b] = _WS
    return classes


_CLASSES = _byte_classes()


def pretokenize(data: bytes) -> list[bytes]:
    """Split raw bytes into pretokens; lossless and single-byte lookahead."""
    classes = _CLASSES
    out: list[bytes] = []
    i, n = 0, len(data)
    while i < n:
        cls = classes[data[i]]
        if cls == _SPACE and i + 1 < n and classes[data[i + 1]] in (_ALNUM, _OTHER):
            run_cls = classes[data[i + 1]]
            j = i + 2
            while j < n and classes[data[j]] == run_cls:
                j += 1
        elif cls == _ALNUM or cls == _OTHER:
            j = i + 1
            while j < n and classes[data[j]] == cls:
                j += 1
        else:
            # whitespace run; a space directly before an alnum/other run
            # belongs to that run instead, so the run stops in front of it
            j = i
            while j < n:
                c = classes[data[j]]
                if c == _WS:
                    j += 1
                elif c == _SPACE:
                    if j + 1 < n and classes[data[j + 1]] in (_ALNUM, _OTHER):
                        break
                    j += 1
                else:
                    break
        out.append(data[i:j])
        i = j
    return out


def encode(model: TokenizerModel, text: bytes | str) -> list[int]:
    """Token ids for raw bytes (str input is encoded UTF-8 first)."""
    data = text.encode("utf-8") if isinstance(text, str) else text
    token_ids = model.token_ids
    out: list[int] = []
    for pretoken in pretokenize(data):
        out.extend(token_ids[part] for part in model.merge_pretoken(pretoken))
    return out


def decode_bytes(model: TokenizerModel, ids: Iterable[int]) -> bytes:
    """Concatenated byte sequences of the given token ids (test support)."""
    tokens = model._tokens_by_id
    try:
        return b"".join(tokens[i] for i in ids)
    except IndexError:
        raise ValueError("token id outside the vocabulary") from None


class StreamingTokenCounter:
    """Counts tokens over a byte stream with arbitrary chunk boundaries.

    Buffers bytes past the last certain pretoken boundary: the final
    pretoken of the buffered data may still grow (or absorb a trailing
    space), so only the pretokens before it are counted eagerly. Single
    consumer; distinct instances may run in parallel.
    """

    def __init__(self, model: TokenizerModel):
        self._model = model
        self._buffer = b""
        self._count = 0
        self._count_pretoken = lru_cache(maxsize=65536)(self._count_uncached)

    def _count_uncached(self, pretoken: bytes) -> int:
        return len(self._model.merge_pretoken(pretoken))

    def update(self, chunk: bytes) -> None:
        if not chunk:
            return
        self._buffer += chunk
        pretokens = pretokenize(self._buffer)
        if len(pretokens) > 1:
            for pretoken in pretokens[:-1]:
                self._count += self._count_pretoken(pretoken)
            self._buffer = pretokens[-1]

    def finish(self) -> int:
        """Flush the buffer and return the total token count."""
        for pretoken in pretokenize(self._buffer):
            self._count += self._count_pretoken(pretoken)
        self._buffer = b""
        return self._count


def count_tokens_stream(model: TokenizerModel, chunks: Iterable[bytes]) -> int:
    """Token count of the concatenation of `chunks`, independent of how the
    bytes are split across them."""
    counter = StreamingTokenCounter(model)
    for chunk in chunks:
        counter.update(chunk)
    return counter.finish()


def load_tokenizer(vocab_data: bytes | str, merges_data: bytes | str) -> TokenizerModel:
    """Build a model from vocab JSON and merges text.

    Vocab: a UTF-8 JSON object mapping byte-escaped token strings to integer
    ids. Merges: UTF-8 text, one merge per line as two space-separated token
    strings, rank = order of appearance; lines starting with '#' and blank
    lines are ignored.
    """
    if isinstance(vocab_data, bytes):
        vocab_data = vocab_data.decode("utf-8")
    if isinstance(merges_data, bytes):
        merges_data = merges_data.decode("utf-8")

    try:
        raw_vocab = json.loads(vocab_data)
    except json.JSONDecodeError as exc:
        raise TokenizerLoadError(f"vocabulary is not valid JSON: {exc}") from None
    if not isinstance(raw_vocab, dict):
        raise TokenizerLoadError("vocabulary JSON must be an object of token -> id")

    decoder = gpt2_byte_decoder()
    token_ids: dict[bytes, int] = {}
    for token, token_id in raw_vocab.items():
        if not isinstance(token_id, int) or isinstance(token_id, bool):
            raise TokenizerLoadError(f"id for token {token!r} must be an integer")
        data = token_string_to_bytes(token, decoder)
        if data in token_ids:
            raise TokenizerLoadError(f"token {token!r} appears twice in the vocabulary")
        token_ids[data] = token_id

    merges: list[tuple[bytes, bytes]] = []
    for lineno, line in enumerate(merges_data.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(" ")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise TokenizerLoadError(
                f"merges line {lineno} must be two space-separated tokens, got {line!r}"
            )
        merges.append(
            (token_string_to_bytes(parts[0], decoder), token_string_to_bytes(parts[1], decoder))
        )

    return TokenizerModel(token_ids, merges)


def load_tokenizer_files(vocab_path: str, merges_path: str) -> TokenizerModel:
    """load_tokenizer over files on disk."""
    with open(vocab_path, "rb") as vf:
        vocab_data = vf.read()
    with open(merges_path, "rb") as mf:
        merges_data = mf.read()
    return load_tokenizer(vocab_data, merges_data)
