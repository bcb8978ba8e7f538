"""Run configuration: defaults, key=value config files and validation."""

from dataclasses import dataclass, fields, replace

from .code import make_code
from .errors import BCHError, ConfigError
from .galois import DEFAULT_PRIMITIVE_POLYS, FieldSpec

# Defaults follow the NOR-flash configuration: GF(2^9), 256-bit messages,
# 18 parity bits (t=2), four-way parallel syndrome and Chien stages.
DEFAULT_M = 9
DEFAULT_K = 256


@dataclass(frozen=True)
class RunConfig:
    m: int = DEFAULT_M
    primitive_poly: int = None     # None: conventional polynomial for m
    t: int = 2
    k: int = None                  # None: 256 for m=9, else full length
    p_s: int = 4
    p_c: int = 4
    seed: int = 0
    flips: int = None              # None: t
    trials: int = 1000
    words: int = 3

    @property
    def field(self):
        poly = self.primitive_poly
        if poly is None:
            if self.m not in DEFAULT_PRIMITIVE_POLYS:
                raise ConfigError(f"m: no default primitive polynomial for m={self.m}")
            poly = DEFAULT_PRIMITIVE_POLYS[self.m]
        return FieldSpec(self.m, poly)

    @property
    def message_bits(self):
        if self.k is not None:
            return self.k
        return DEFAULT_K if self.m == DEFAULT_M else None

    @property
    def flip_count(self):
        return self.t if self.flips is None else self.flips

    def code(self):
        """Validate and build the code; errors name the offending field."""
        for name in ("p_s", "p_c", "trials", "words"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name}: must be >= 1, got {getattr(self, name)}")
        if self.flips is not None and self.flips < 0:
            raise ConfigError(f"flips: must be >= 0, got {self.flips}")
        if self.seed < 0:
            raise ConfigError(f"seed: must be >= 0, got {self.seed}")
        try:
            return make_code(self.field, self.t, self.message_bits)
        except ConfigError:
            raise
        except BCHError as exc:
            raise ConfigError(f"{type(exc).__name__}: {exc}") from exc


KEY_ALIASES = {
    "m": "m",
    "primitive_poly": "primitive_poly",
    "prim_poly": "primitive_poly",
    "t": "t",
    "k": "k",
    "ps": "p_s",
    "p_s": "p_s",
    "pc": "p_c",
    "p_c": "p_c",
    "seed": "seed",
    "flips": "flips",
    "trials": "trials",
    "words": "words",
}


def _parse_int(text):
    return int(text, 0)


def parse_config(text, source="<config>"):
    """Parse ``key = value`` lines (``#`` comments) into field overrides."""
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected key=value, got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        name = KEY_ALIASES.get(key.lower().replace("-", "_"))
        if name is None or name not in known:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        try:
            out[name] = _parse_int(value)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: {key} must be an integer, got {value!r}") from None
    return out


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read(), str(path))


def merge(base, *overrides):
    cfg = base
    for ov in overrides:
        cfg = replace(cfg, **{k: v for k, v in ov.items() if v is not None})
    return cfg
