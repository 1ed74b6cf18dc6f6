"""
Component registry: classes decorated with `register` can be built from a
config section by `create`.
"""

import importlib
import inspect
from collections import defaultdict
from typing import Any, Dict

GLOBAL_CONFIG = defaultdict(dict)


def register(dct: Dict = GLOBAL_CONFIG, name=None, force=False):
    """
    dct:
        registry to record the class schema in
    name:
        registry key, defaults to the class name
    force:
        overwrite an existing entry
    """

    def decorator(cls):
        if not inspect.isclass(cls):
            raise ValueError(f"Do not support {type(cls)} register")

        register_name = cls.__name__ if name is None else name
        if not force:
            assert register_name not in dct, f"{register_name} has been already registered"

        dct[register_name] = extract_schema(cls)
        return cls

    return decorator


def extract_schema(cls: type) -> Dict[str, Any]:
    """Collect constructor defaults; `__share__` names are taken from the top level of the config."""
    argspec = inspect.getfullargspec(cls.__init__)
    arg_names = [arg for arg in argspec.args if arg != "self"]
    defaults = argspec.defaults or ()
    num_requires = len(arg_names) - len(defaults)

    schema = {
        "_name": cls.__name__,
        "_pymodule": importlib.import_module(cls.__module__),
        "_share": list(getattr(cls, "__share__", [])),
        "_kwargs": {},
    }
    for i, arg in enumerate(arg_names):
        if arg in schema["_share"]:
            assert i >= num_requires, f"shared argument `{arg}` must have a default value"
        value = defaults[i - num_requires] if i >= num_requires else None
        schema[arg] = value
        schema["_kwargs"][arg] = value

    return schema


def create(type_or_name, global_cfg=GLOBAL_CONFIG, **kwargs):
    """
    Build a registered component.

    `global_cfg[name]` is either a class schema (from `register`, possibly
    overlaid with yaml values) or a `{type: ClassName, ...}` section whose
    extra keys override the class defaults.
    """
    assert type(type_or_name) in (type, str), "create should be modules or name."
    name = type_or_name if isinstance(type_or_name, str) else type_or_name.__name__

    if name not in global_cfg:
        raise ValueError(f"The module {name} is not registered")

    cfg = global_cfg[name]

    if isinstance(cfg, dict) and "type" in cfg:
        cls_name = cfg["type"]
        if cls_name not in global_cfg:
            raise ValueError(f"Missing {cls_name} for section `{name}`")
        schema = global_cfg[cls_name]
        overrides = {k: v for k, v in cfg.items() if k != "type"}
        overrides.update(kwargs)
        return _instantiate(schema, global_cfg, overrides)

    return _instantiate(cfg, global_cfg, kwargs)


def _instantiate(schema: Dict[str, Any], global_cfg, overrides: Dict[str, Any]):
    cls = getattr(schema["_pymodule"], schema["_name"])

    module_kwargs = dict(schema["_kwargs"])
    module_kwargs.update({k: v for k, v in schema.items() if not k.startswith("_")})

    for k in schema["_share"]:
        if k in global_cfg:
            module_kwargs[k] = global_cfg[k]

    unknown = set(overrides) - set(schema["_kwargs"])
    if unknown:
        raise ValueError(f"unknown args {sorted(unknown)} for {schema['_name']}")
    module_kwargs.update(overrides)

    return cls(**module_kwargs)
