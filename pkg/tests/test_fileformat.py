import numpy as np
import pytest

from src.angles import AngulatedStructure, ListedAngleClass, SplitAngleClass, WrapExactClass, trivial_angle
from src.category import PresentedCategory, Shift, SuspensionFunctor
from src.config import AngleOracle
from src.corpus import CORPUS, export_entry, load_entry, local_algebra_category
from src.errors import CategoryFileError, PresentationError
from src.fileformat import parse_category_file, read_category_file, serialize, serialize_structure, write_category_file


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_exports_reparse_to_the_same_tables(name):
    entry = load_entry(name)
    text = export_entry(entry)
    document = parse_category_file(text)
    assert document.category.same_tables(entry.category)
    assert document.Z == entry.Z
    assert document.D == entry.D
    assert document.structure.n == entry.structure.n
    assert serialize(document) == text


def test_dual_numbers_export_lines():
    lines = export_entry(load_entry("dual-numbers")).splitlines()
    for expected in ("comp id id = id", "comp id x = x", "comp x id = x", "id P = id",
                     "sigma hom id -> id", "sigma hom x -> x", "angles wrap-exact", "sub Z = P", "sub D ="):
        assert expected in lines
    assert not any(line.startswith("comp x x") for line in lines)


def test_identity_is_inferred_from_the_unit_laws(dual_numbers_text):
    document = parse_category_file(dual_numbers_text)
    assert list(document.category.identities[0]) == [1, 0]
    assert document.category.same_tables(local_algebra_category())
    assert document.relations == [("x", "x", "0")]
    assert isinstance(document.angles, WrapExactClass)
    assert document.oracle == AngleOracle.WRAP_EXACT


def test_conflicting_relation_is_reported(dual_numbers_text):
    text = dual_numbers_text.replace("rel x x = 0", "comp x x = id\nrel x x = 0")
    with pytest.raises(CategoryFileError, match="associativity/unit consistency"):
        parse_category_file(text)


def test_unit_law_violation_is_reported(dual_numbers_text):
    text = dual_numbers_text.replace("comp id x = x", "comp id x = 0\nid P = id")
    with pytest.raises(PresentationError, match="associativity/unit consistency"):
        parse_category_file(text)


def test_empty_generator_list_is_valid():
    document = parse_category_file("field p=3\nn=3\nangles split\n")
    assert document.category.generator_count == 0
    assert document.Z.is_zero and document.D.is_zero


def test_errors_carry_line_and_column():
    text = "field p=2\nn=4\ngen P\nhom P Q dim=1 basis=f\n"
    with pytest.raises(CategoryFileError) as info:
        parse_category_file(text)
    assert info.value.line == 4
    assert info.value.column == 7
    assert str(info.value) == "line 4, column 7: unknown generator Q"


@pytest.mark.parametrize("text, message", [
    ("n=4\nangles split\n", "missing 'field p=<prime>' header"),
    ("field p=2\nangles split\n", "missing 'n=<int>' header"),
    ("field p=2\nn=4\n", "missing 'angles <oracle>' line"),
    ("field p=4\nn=4\nangles split\n", "p must be one of"),
    ("field p=2\nn=2\nangles split\n", "n must be an integer >= 3"),
    ("field p=2\nn=4\nangles cones\n", "unknown angle oracle"),
    ("field p=2\nn=4\nangles split\nfrobnicate\n", "unknown keyword"),
])
def test_malformed_headers(text, message):
    with pytest.raises(CategoryFileError, match=message):
        parse_category_file(text)


def test_n_override(dual_numbers_text):
    assert parse_category_file(dual_numbers_text, n=6).structure.n == 6


def test_missing_sigma_image_is_reported(dual_numbers_text):
    text = dual_numbers_text + "sigma gen P -> P\nsigma hom id -> id\n"
    with pytest.raises(CategoryFileError, match="Σ image missing for basis morphism x"):
        parse_category_file(text)


def test_listed_angles_and_witness_lines():
    text = "\n".join([
        "field p=2",
        "n=3",
        "gen s",
        "hom s s dim=1 basis=e",
        "comp e e = e",
        "angles list",
        "sub D = s",
        "seq s|s|0 : 1 ; - ; -",
        "seq 0|s|s : - ; 1 ; -",
        "fixed s : s|s|0 : 1 ; - ; -",
        "cofixed s : 0|s|s : - ; 1 ; -",
    ]) + "\n"
    document = parse_category_file(text)
    assert isinstance(document.angles, ListedAngleClass)
    structure = document.structure
    member = document.angles.members[0]
    assert member == trivial_angle(structure, document.category.object_of("s"))
    witness = document.witness()
    assert witness is not None
    assert witness.fixed[0] == member
    assert serialize(document).splitlines()[-2:] == ["fixed s : s|s|0 : 1 ; - ; -", "cofixed s : 0|s|s : - ; 1 ; -"]


def test_seq_lines_need_listed_angles(dual_numbers_text):
    text = dual_numbers_text + "seq P|P|0|P : 1 0 ; - ; - ; -\n"
    with pytest.raises(CategoryFileError, match="seq lines need 'angles list'"):
        parse_category_file(text)


def test_duplicate_basis_names_cannot_be_written():
    ones = np.ones((1, 1, 1), dtype=np.int64)
    category = PresentedCategory(2, ["a", "b"], {(0, 0): ["id"], (1, 1): ["id"]},
                                 {(0, 0, 0): ones, (1, 1, 1): ones}, {0: [1], 1: [1]}).validate()
    structure = AngulatedStructure(category, Shift.from_automorphism(SuspensionFunctor.identity_on(category)), 4)
    with pytest.raises(PresentationError, match="basis name id is not unique"):
        serialize_structure(structure, SplitAngleClass(structure))


def test_file_round_trip_on_disk(tmp_path, dual_numbers_text):
    path = tmp_path / "dual.cat"
    write_category_file(str(path), dual_numbers_text)
    document = read_category_file(str(path))
    assert document.name == "dual-numbers"
