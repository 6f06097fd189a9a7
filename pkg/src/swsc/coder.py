"""Sliding-window adaptive Shannon coder and its stream format.

Each symbol is encoded against the window of the previous ell symbols: a
symbol whose window frequency reaches the threshold gets a flag bit 1 plus
its canonical Shannon codeword; any other symbol gets a flag bit 0 plus its
plain width-bit index. Encoder and decoder then apply the same window update,
so both sides maintain identical state in lockstep.

Stream layout: a fixed little-endian header, then the MSB-first bit payload
zero-padded to a byte boundary.

    magic      4 bytes  b"SWSC"
    version    u8       1
    backend    u8       0 = trie, 1 = hashed (informational)
    sigma      u32
    ell        u32      frozen window length
    threshold  u32      frozen frequency threshold
    l_max      u8       frozen maximum codeword length
    width      u8       frozen literal width
    n          u64      number of symbols
    lambda     u64      IEEE-754 bits of lambda (informational)
    c          u32      window scale knob (informational)

The decoder trusts the frozen header fields; it never re-derives them.

Raw symbol files are fixed-width little-endian unsigned integers of 1, 2 or
4 bytes per symbol, the smallest width covering sigma - 1.
"""

import io
import struct
from dataclasses import dataclass, fields

from .bitio import BitReader, BitWriter
from .codebook import Codebook, codeword_length
from .dictionary import CodeRecord, make_dictionary, symbol_model_bytes
from .errors import CorruptStreamError, InternalInconsistencyError, ParameterError
from .params import CoderParams

MAGIC = b"SWSC"
VERSION = 1
_HEADER = struct.Struct("<4sBBIIIBBQQI")
HEADER_BYTES = _HEADER.size

_BACKEND_FLAGS = {"trie": 0, "hashed": 1}
_BACKEND_NAMES = {0: "trie", 1: "hashed"}

# distinct from None so a cached dictionary miss is also usable
_NO_CACHE = object()


class CoderState:
    """Window, dictionary and codebook evolving in encoder/decoder lockstep."""

    def __init__(self, params: CoderParams, backend: str = "trie", seed: int = 0,
                 eps_prime: float = 0.5):
        params.validate()
        self.params = params
        self.backend = backend
        self.dictionary = make_dictionary(backend, params.sigma, seed=seed,
                                          eps_prime=eps_prime)
        self.codebook = Codebook(params.l_max)
        self._buf = [0] * params.ell  # ring buffer, head = oldest when full
        self._len = 0
        self._head = 0
        self.position = 0  # symbols processed
        # plain-int copies of the per-step constants, off the frozen dataclass
        self._ell = params.ell
        self._threshold = params.threshold
        self._l_max = params.l_max

    def window_contents(self) -> list[int]:
        """Window symbols oldest to newest (test and audit hook)."""
        if self._len < self.params.ell:
            return self._buf[: self._len]
        h = self._head
        return self._buf[h:] + self._buf[:h]

    @property
    def window_len(self) -> int:
        return self._len

    def step_update(self, a: int, rec_a=_NO_CACHE) -> None:
        """Slide the window over symbol a and repair dictionary and codebook.

        The order below is fixed; both ends of the stream must replay it
        identically for codebook offsets to agree. When the evicted symbol is
        a itself, the same steps run and cancel arithmetically.

        rec_a may carry the result of a dictionary lookup of a (a record, or
        None for a miss) done just before the call; it is a cache only and
        never changes the outcome.
        """
        ell = self._ell
        threshold = self._threshold
        d = self.dictionary
        cb = self.codebook
        # 1. rotate the ring
        if self._len < ell:
            self._buf[self._len] = a
            self._len += 1
            evicted = None
        else:
            h = self._head
            evicted = self._buf[h]
            self._buf[h] = a
            h += 1
            self._head = h if h < ell else 0
        # 2. + 3. the evicted symbol loses one occurrence
        if evicted is not None:
            rec = d.get(evicted)
            if rec is None:
                raise InternalInconsistencyError(f"evicted symbol {evicted} untracked")
            f_new = rec.freq - 1
            rec.freq = f_new
            if f_new == 0:
                d.delete(evicted)
                if evicted == a:
                    rec_a = _NO_CACHE  # the cached record was just dropped
            if rec.length is not None:
                if f_new < threshold:
                    cb.remove(evicted, rec, d)
                else:
                    new_len = codeword_length(ell, f_new)
                    if new_len > rec.length:
                        if new_len > self._l_max:
                            raise InternalInconsistencyError(
                                "frequent symbol demoted past l_max")
                        cb.move(evicted, rec, rec.length + 1, d)
        # 4. + 5. the incoming symbol gains one
        rec = d.get(a) if rec_a is _NO_CACHE else rec_a
        if rec is None:
            rec = CodeRecord(1)
            d.put(a, rec)
            f = 1
        else:
            f = rec.freq + 1
            rec.freq = f
        if f >= threshold:
            if rec.length is None:
                cb.insert(a, codeword_length(ell, f), rec)
            elif codeword_length(ell, f) < rec.length:
                cb.move(a, rec, rec.length - 1, d)
        # 6. the code must stay complete-or-under
        if cb.kraft_total > cb.capacity:
            raise InternalInconsistencyError("Kraft budget exceeded after update")
        self.position += 1

    def _encode_symbol_ex(self, a: int, writer: BitWriter) -> tuple[int, int]:
        """Encode one symbol; returns (bits written, codeword length or -1)."""
        p = self.params
        if not 0 <= a < p.sigma:
            raise ParameterError(
                f"symbol {a} at position {self.position} out of range for sigma {p.sigma}")
        rec = self.dictionary.get(a)
        if rec is not None and rec.length is not None:
            value, j = self.codebook.codeword(rec.length, rec.index + 1)
            writer.write_bits((1 << j) | value, j + 1)
            bits = j + 1
        else:
            writer.write_bits(a, p.width + 1)  # flag 0 then the plain index
            bits = p.width + 1
            j = -1
        self.step_update(a, rec)
        return bits, j

    def encode_symbol(self, a: int, writer: BitWriter) -> int:
        """Encode one symbol and update the window; returns bits written."""
        return self._encode_symbol_ex(a, writer)[0]

    def _decode_symbol_ex(self, reader: BitReader) -> tuple[int, int]:
        """Decode one symbol; returns (symbol, codeword length or -1)."""
        p = self.params
        v = reader.peek_bits(1 + p.width)
        if v >> p.width == 0:
            reader.consume(1 + p.width)
            a = v & ((1 << p.width) - 1)
            if a >= p.sigma:
                raise CorruptStreamError(f"literal {a} out of range for sigma {p.sigma}")
            j = -1
        else:
            b = (v >> (p.width - p.l_max)) & ((1 << p.l_max) - 1)
            reader.consume(1)
            a, j = self.codebook.decode(b)
            reader.consume(j)
        self.step_update(a)
        return a, j

    def decode_symbol(self, reader: BitReader) -> int:
        """Decode one symbol and update the window."""
        return self._decode_symbol_ex(reader)[0]


@dataclass
class EncodeReport:
    """Counters from one encoding run."""

    n: int
    payload_bits: int
    payload_bytes: int
    literal_count: int
    coded_count: int
    max_code_size: int  # largest coded-symbol set seen
    ps_touches: int  # partial-sums node touches over the run
    ps_touches_max_step: int  # worst single-symbol touch count
    cost_units: int  # sum of 1 + handled codeword length

    def lines(self):
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class DecodeReport:
    """Counters from one decoding run."""

    n: int
    payload_bits: int
    payload_bytes: int
    literal_count: int
    coded_count: int
    ps_touches: int
    ps_touches_max_step: int
    cost_units: int

    def lines(self):
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]

    def to_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


def write_header(out, params: CoderParams, backend: str, n: int) -> None:
    lam_bits = struct.unpack("<Q", struct.pack("<d", params.lam))[0]
    out.write(_HEADER.pack(MAGIC, VERSION, _BACKEND_FLAGS[backend], params.sigma,
                           params.ell, params.threshold, params.l_max, params.width,
                           n, lam_bits, params.c))


def read_header(data: bytes) -> tuple[CoderParams, str, int]:
    """Parse and validate a header; returns (params, backend name, n)."""
    if len(data) < HEADER_BYTES:
        raise CorruptStreamError("header truncated")
    (magic, version, backend_flag, sigma, ell, threshold, l_max, width,
     n, lam_bits, c) = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CorruptStreamError(f"bad magic {magic!r}")
    if version != VERSION:
        raise CorruptStreamError(f"unsupported version {version}")
    if backend_flag not in _BACKEND_NAMES:
        raise CorruptStreamError(f"unknown backend flag {backend_flag}")
    lam = struct.unpack("<d", struct.pack("<Q", lam_bits))[0]
    try:
        params = CoderParams.from_frozen(sigma=sigma, lam=lam, c=c, ell=ell,
                                         threshold=threshold, l_max=l_max, width=width)
    except ParameterError as e:
        raise CorruptStreamError(f"inconsistent header: {e}") from e
    return params, _BACKEND_NAMES[backend_flag], n


def encode_stream(params: CoderParams, symbols, out, backend: str = "trie",
                  seed: int = 0) -> EncodeReport:
    """Encode a symbol sequence to the binary sink out; returns the report."""
    n = len(symbols)
    write_header(out, params, backend, n)
    state = CoderState(params, backend=backend, seed=seed)
    writer = BitWriter()
    encode_ex = state._encode_symbol_ex
    kraft = state.codebook.kraft
    codebook = state.codebook
    literals = 0
    cost = 0
    max_step = 0
    max_size = 0
    t_prev = kraft.touches
    for a in symbols:
        bits, j = encode_ex(a, writer)
        t = kraft.touches
        dt = t - t_prev
        t_prev = t
        if dt > max_step:
            max_step = dt
        if j < 0:
            literals += 1
            cost += 1
        else:
            cost += 1 + j
        if codebook.size > max_size:
            max_size = codebook.size
    payload = writer.finish()
    out.write(payload)
    return EncodeReport(n=n, payload_bits=writer.bit_length, payload_bytes=len(payload),
                        literal_count=literals, coded_count=n - literals,
                        max_code_size=max_size, ps_touches=kraft.touches,
                        ps_touches_max_step=max_step, cost_units=cost)


def encode_to_bytes(params: CoderParams, symbols, backend: str = "trie",
                    seed: int = 0) -> tuple[bytes, EncodeReport]:
    """Convenience wrapper encoding to an in-memory stream."""
    out = io.BytesIO()
    report = encode_stream(params, symbols, out, backend=backend, seed=seed)
    return out.getvalue(), report


def decode_stream(data, backend: str | None = None,
                  seed: int = 0) -> tuple[list[int], DecodeReport]:
    """Decode a complete stream (bytes or binary file) back to symbols.

    The dictionary backend defaults to the header's flag; passing backend
    overrides it, which never changes the result.
    """
    if hasattr(data, "read"):
        data = data.read()
    params, header_backend, n = read_header(data)
    state = CoderState(params, backend=backend or header_backend, seed=seed)
    reader = BitReader(data[HEADER_BYTES:])
    decode_ex = state._decode_symbol_ex
    kraft = state.codebook.kraft
    out = []
    append = out.append
    literals = 0
    cost = 0
    max_step = 0
    t_prev = kraft.touches
    for i in range(n):
        try:
            a, j = decode_ex(reader)
        except CorruptStreamError as e:
            raise CorruptStreamError(f"symbol {i}: {e}") from e
        t = kraft.touches
        dt = t - t_prev
        t_prev = t
        if dt > max_step:
            max_step = dt
        if j < 0:
            literals += 1
            cost += 1
        else:
            cost += 1 + j
        append(a)
    return out, DecodeReport(n=n, payload_bits=reader.position,
                             payload_bytes=len(data) - HEADER_BYTES,
                             literal_count=literals, coded_count=n - literals,
                             ps_touches=kraft.touches, ps_touches_max_step=max_step,
                             cost_units=cost)


def write_symbols(symbols, sigma: int) -> bytes:
    """Pack symbols in the raw fixed-width little-endian format."""
    sb = symbol_model_bytes(sigma)
    buf = bytearray(len(symbols) * sb)
    pos = 0
    for a in symbols:
        buf[pos:pos + sb] = int(a).to_bytes(sb, "little")
        pos += sb
    return bytes(buf)


def read_symbols(data: bytes, sigma: int) -> list[int]:
    """Unpack a raw fixed-width little-endian symbol file."""
    sb = symbol_model_bytes(sigma)
    if len(data) % sb:
        raise ParameterError(
            f"raw input length {len(data)} is not a multiple of {sb} bytes")
    return [int.from_bytes(data[i:i + sb], "little") for i in range(0, len(data), sb)]
