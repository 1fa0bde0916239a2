""" Frame decoders: pluggable objects that decode one interleaved frame

Examples:
    decoder = prepare_decoder(DecoderKind.TWO_PASS, code, cfg)
    outcome = decoder(frame)

    decoder = prepare_decoder('single_pass', code, cfg)
"""
from __future__ import annotations

from typing import Union, Type

from msirs.annotations import SymbolsT
from msirs.rs import RsCode
from .defs import DecoderKind
from .interleaver import InterleaverConfig
from .two_pass import FrameOutcome, single_pass_frame, decode_frame


class FrameDecoderBase:
    """ Base class for frame decoders

    A frame decoder is a callable that decodes one frame of a particular (code, interleaver) scheme.
    """
    kind: DecoderKind
    code: RsCode
    cfg: InterleaverConfig

    def for_scheme(self, code: RsCode, cfg: InterleaverConfig):
        """ Bind the decoder to a code and an interleaver """
        if code.n != cfg.n:
            raise ValueError(f'{code!r} does not fit an interleaver for n={cfg.n}')
        self.code = code
        self.cfg = cfg

    def __call__(self, frame: SymbolsT) -> FrameOutcome:
        """ Decode a frame """
        raise NotImplementedError


class SinglePass(FrameDecoderBase):
    """ Errors-only decoding of every component codeword """
    kind = DecoderKind.SINGLE_PASS

    def __call__(self, frame: SymbolsT) -> FrameOutcome:
        return single_pass_frame(self.code, self.cfg, frame)


class TwoPass(FrameDecoderBase):
    """ First pass, burst window inference, erasure-aided second pass """
    kind = DecoderKind.TWO_PASS

    def __call__(self, frame: SymbolsT) -> FrameOutcome:
        return decode_frame(self.code, self.cfg, frame)


DECODERS = {
    DecoderKind.SINGLE_PASS: SinglePass,
    DecoderKind.TWO_PASS: TwoPass,
}

# Decoder, as given to prepare_decoder():
# * DecoderKind, or its string value
# * a FrameDecoderBase subclass
# * a FrameDecoderBase instance
DecoderT = Union[DecoderKind, str, Type[FrameDecoderBase], FrameDecoderBase]


def prepare_decoder(decoder: DecoderT, code: RsCode, cfg: InterleaverConfig) -> FrameDecoderBase:
    """ Convert the input to a frame decoder bound to the scheme """
    # FrameDecoderBase()
    if isinstance(decoder, FrameDecoderBase):
        decoder.for_scheme(code, cfg)
        return decoder
    # FrameDecoderBase as a class
    elif isinstance(decoder, type) and issubclass(decoder, FrameDecoderBase):
        return prepare_decoder(decoder(), code, cfg)
    # DecoderKind, 'two_pass'
    elif isinstance(decoder, str):
        return prepare_decoder(DECODERS[DecoderKind(decoder)], code, cfg)
    # WAT?
    else:
        raise ValueError(decoder)
