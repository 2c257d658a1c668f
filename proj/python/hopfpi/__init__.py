"""Exact path-integral engine for Hopf-valued Brown functors.

The heavy lifting lives in the C++ extension; this wrapper decodes the JSON
payloads into plain dictionaries.
"""

import json as _json

from hopfpi import _core

smith_normal_form = _core.smith_normal_form
solve_congruence = _core.solve_congruence
make_group = _core.make_group


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


def _wrap_hom(fn):
    def call(hom):
        return _json.loads(fn(_json.dumps(hom)))

    call.__name__ = fn.__name__
    return call


kernel = _wrap_hom(_core.kernel)
cokernel = _wrap_hom(_core.cokernel)
image = _wrap_hom(_core.image)

homology = _wrap(_core.homology)
brown = _wrap(_core.brown)
pi = _wrap(_core.pi)
omega = _wrap(_core.omega)
theta = _wrap(_core.theta)
lift = _wrap(_core.lift)
dw = _wrap(_core.dw)
pairing = _wrap(_core.pairing)
verify = _wrap(_core.verify)
corpus = _wrap(_core.corpus)

__all__ = [
    "smith_normal_form",
    "solve_congruence",
    "make_group",
    "kernel",
    "cokernel",
    "image",
    "homology",
    "brown",
    "pi",
    "omega",
    "theta",
    "lift",
    "dw",
    "pairing",
    "verify",
    "corpus",
]
