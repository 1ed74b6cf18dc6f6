"""
YAML config loading with `__include__` composition and `a.b=value` overrides.
"""

import copy
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from .workspace import GLOBAL_CONFIG

__all__ = [
    "load_config",
    "merge_config",
    "merge_dict",
    "parse_cli",
]


INCLUDE_KEY = "__include__"


def load_config(file_path, cfg: Optional[Dict] = None) -> Dict:
    """load config; included files are merged first, so the including file wins"""
    path = Path(file_path)
    assert path.suffix in (".yml", ".yaml"), "only support yaml files"
    cfg = {} if cfg is None else cfg

    with path.open() as f:
        file_cfg = yaml.safe_load(f)
    if file_cfg is None:
        return cfg

    for base_yaml in file_cfg.pop(INCLUDE_KEY, []):
        base_path = Path(base_yaml).expanduser()
        if not base_path.is_absolute():
            base_path = path.parent / base_path
        merge_dict(cfg, load_config(base_path))

    return merge_dict(cfg, file_cfg)


def merge_dict(dct: Dict, another_dct: Dict, inplace: bool = True) -> Dict:
    """merge another_dct into dct, recursing into nested dicts"""
    if not inplace:
        dct = copy.deepcopy(dct)

    for k, v in another_dct.items():
        if k in dct and isinstance(dct[k], dict) and isinstance(v, dict):
            merge_dict(dct[k], v)
        else:
            dct[k] = v

    return dct


def dictify(s: str, v: Any) -> Dict:
    if "." not in s:
        return {s: v}
    key, rest = s.split(".", 1)
    return {key: dictify(rest, v)}


def parse_cli(nargs: Optional[List[str]]) -> Dict:
    """
    parse command-line overrides
        convert `oracle.factorial_cap=10 closure_depth=3` to
        `{'oracle': {'factorial_cap': 10}, 'closure_depth': 3}`
    """
    cfg = {}
    for s in nargs or []:
        k, sep, v = s.strip().partition("=")
        if not sep:
            raise ValueError(f"override `{s}` is not of the form key=value")
        merge_dict(cfg, dictify(k, yaml.safe_load(v)))

    return cfg


def merge_config(cfg: Dict, another_cfg=GLOBAL_CONFIG, inplace: bool = False, overwrite: bool = False):
    """
    Merge the registry (or another config) into cfg and return the result.

    Example:

        cfg = load_config('./configs/hookpairs.yml')
        cfg = merge_config(cfg)
        oracle = create('oracle', cfg)
    """

    def _merge(dct, another):
        for k in another:
            if k not in dct:
                dct[k] = another[k]
            elif isinstance(dct[k], dict) and isinstance(another[k], dict):
                _merge(dct[k], another[k])
            elif overwrite:
                dct[k] = another[k]
        return dct

    if not inplace:
        cfg = copy.deepcopy(cfg)

    return _merge(cfg, another_cfg)
