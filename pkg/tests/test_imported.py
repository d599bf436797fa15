# tests/test_imported.py
import json
from fractions import Fraction

import pytest

from charparam import partitions, symmetric_basis
from frobstats import polynomial_basis, theoretical_gram
from permcore import ClassDataError, haar_weights, imported_group_from_dict, load_imported_group

SYM4_DATA = {
    "name": "Sym4-imported",
    "degree": 4,
    "order": 24,
    "classes": [
        {"cycle_type": [1, 1, 1, 1], "size": 1, "svector": [3, 3, 1]},
        {"cycle_type": [1, 1, 2], "size": 6},
        {"cycle_type": [1, 3], "size": 8},
        {"cycle_type": [2, 2], "size": 3},
        {"cycle_type": [4], "size": 6},
    ],
    "rational_characters": [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [3, 1, 0, -1, -1],
        [3, -1, 0, -1, 1],
        [2, 0, -1, 2, 0],
    ],
}


def _sixty_seven_classes():
    """Synthetic class data with 67 classes and two orthogonal rational rows."""
    shapes = list(partitions(12))[:67]
    sizes = [2] + [1] * 66
    sign = [1] * 33 + [-1] * 34
    return {
        "name": "synthetic67",
        "degree": 12,
        "order": sum(sizes),
        "classes": [{"cycle_type": list(s), "size": m} for s, m in zip(shapes, sizes)],
        "rational_characters": [[1] * 67, sign],
    }


def test_sym4_class_data_loads_and_is_consistent():
    G = imported_group_from_dict(SYM4_DATA)
    assert G.order == 24
    assert G.class_sizes == (1, 6, 8, 3, 6)
    gram = G.rational_gram()
    assert gram == tuple(tuple(Fraction(int(i == j)) for j in range(5)) for i in range(5))


def test_sixty_seven_class_dataset_gives_theoretical_grams():
    G = imported_group_from_dict(_sixty_seven_classes())
    assert len(G.classes) == 67
    assert sum(haar_weights(G)) == 1
    assert G.rational_gram() == ((1, 0), (0, 1))
    basis = polynomial_basis(symmetric_basis(12)[:3])
    M = theoretical_gram(G, basis)
    assert M[0][0] == 1
    assert all(M[i][j] == M[j][i] for i in range(3) for j in range(3))


def test_wrong_svector_rejected():
    data = json.loads(json.dumps(SYM4_DATA))
    data["classes"][0]["svector"] = [3, 3, 0]
    with pytest.raises(ClassDataError):
        imported_group_from_dict(data)


def test_sizes_must_sum_to_order():
    data = json.loads(json.dumps(SYM4_DATA))
    data["order"] = 25
    with pytest.raises(ClassDataError):
        imported_group_from_dict(data)


def test_non_orthogonal_rows_rejected():
    data = json.loads(json.dumps(SYM4_DATA))
    data["rational_characters"][1] = [1, 1, 1, 1, -1]
    with pytest.raises(ClassDataError):
        imported_group_from_dict(data)


def test_missing_field_and_bad_file(tmp_path):
    with pytest.raises(ClassDataError):
        imported_group_from_dict({"name": "x", "degree": 4})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ClassDataError):
        load_imported_group(bad)
    good = tmp_path / "sym4.json"
    good.write_text(json.dumps(SYM4_DATA), encoding="utf-8")
    assert load_imported_group(good).name == "Sym4-imported"
