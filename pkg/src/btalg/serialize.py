"""JSON forms of the combinatorial and algebraic objects.

Permutations serialize as 1-based one-line arrays; set partitions as lists
of blocks; multitableaux as lists of components, each a list of rows; cell
shapes as {"blam": ..., "bmu": ...}.
"""

from __future__ import annotations

from .cellposet import CellShape, CellTableau


def perm_to_json(w):
    return list(w)


def perm_from_json(obj):
    return tuple(obj)


def multitableau_to_json(t_multi):
    return [[list(row) for row in comp] for comp in t_multi]


def multitableau_from_json(obj):
    return tuple(tuple(tuple(row) for row in comp) for comp in obj)


def multicomp_to_json(blam):
    return [list(c) for c in blam]


def multicomp_from_json(obj):
    return tuple(tuple(c) for c in obj)


def shape_to_json(shape):
    return {"blam": multicomp_to_json(shape.blam), "bmu": multicomp_to_json(shape.bmu)}


def shape_from_json(obj):
    return CellShape(multicomp_from_json(obj["blam"]), multicomp_from_json(obj["bmu"]))


def cell_tableau_to_json(es):
    return {"t": multitableau_to_json(es.t), "u": multitableau_to_json(es.u)}


def cell_tableau_from_json(obj):
    return CellTableau(multitableau_from_json(obj["t"]), multitableau_from_json(obj["u"]))


def basis_record_to_json(shape, s_tab, t_tab, element):
    from .algebra import element_to_json
    return {
        "shape": shape_to_json(shape),
        "s": cell_tableau_to_json(s_tab),
        "t": cell_tableau_to_json(t_tab),
        "element": element_to_json(element),
    }
