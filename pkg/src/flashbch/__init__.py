"""Software model of a flash-memory BCH codec.

Field arithmetic, code construction, systematic encoding, syndrome /
Berlekamp-Massey / Chien decoding with parallel-p stages, XOR-sharing
optimization of the Chien constant multipliers, and a clock-cycle model of
the pipelined decoder.
"""

from .channel import Bernoulli, ChannelSpec, ExactPositions, RandomFlips, campaign, inject
from .code import CodeSpec, generator_polynomial, make_code
from .decoder import (DecodeResult, DecodeStatus, ErrorLocator, berlekamp_massey,
                      chien_search, compute_syndromes, correct, decode,
                      even_syndromes_from_odd)
from .encoder import encode, lfsr_encode
from .galois import (FieldSpec, GaloisField, MastrovitoMatrix, build_field,
                     mastrovito_matrix, minimal_polynomial)
from .pipeline import (ArchConfig, PipelineSchedule, latency_non_pipelined,
                       schedule_pipelined, throughput_report)
from .xornet import (XorNetwork, build_chien_bank, build_multiplier_network, cse_group,
                     cse_intra, evaluate_network, gate_report)

__version__ = "0.1.0"
