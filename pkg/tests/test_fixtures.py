import oracles
from conftest import fixture_path, pinned_config, read_fixture
from mpibind import cli
from mpibind.kinds import function_has_poly
from mpibind.parse import parse_kind_maps


def test_corpus_coverage():
    gen = cli.generate(pinned_config("baseline"))
    fns = gen.merged.generated()
    maps = parse_kind_maps(read_fixture("apis_mapping.txt"))
    used = {p.kind for fn in gen.merged.functions for p in fn.parameters}
    assert maps.kinds() - {"INTERNAL_COUNT"} <= used
    directives = {k for fn in fns for k in fn.attributes}
    assert {".desc", ".seealso", ".earlyreturn"} <= directives
    flavors = {b.flavor for fn in fns for b in fn.blocks.values()}
    assert flavors == {"comment", "code"}
    assert sum(function_has_poly(fn) for fn in fns) >= 3
    assert any(fn.origin == "custom" for fn in fns)
    assert oracles.scan()["renamed"]


def test_corpus_size_and_shapes():
    names = oracles.scan()["standard"]
    assert 18 <= len(names) <= 25
    for shape in ("MPI_Send", "MPI_Bcast", "MPI_Wait", "MPI_Type_commit"):
        assert shape in names


def test_send_example_entry_is_shared():
    example = read_fixture("send_example", "mpi_standard_api.txt").split("MPI_Send:", 1)[1]
    assert "MPI_Send:" + example in read_fixture("mpi_standard_api.txt")
