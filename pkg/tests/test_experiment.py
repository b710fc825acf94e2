import io

import pytest

from cliquelab.errors import ConfigError, DimacsParseError
from cliquelab.experiment import (
    CSV_COLUMNS,
    Instance,
    parse_seed_range,
    random_suite,
    run_experiment,
    run_suite,
    summarise,
    write_csv,
)
from cliquelab.run_logger import RunLogger
from cliquelab.search import SearchConfig


def test_figures_give_four_rows(fig1_path, fig2_path):
    result = run_experiment([fig1_path, fig2_path])
    assert [(r.instance, r.variant, r.omega) for r in result.rows] == [
        ("fig1.clq", "baseline", 4),
        ("fig1.clq", "inherited", 4),
        ("fig2.clq", "baseline", 2),
        ("fig2.clq", "inherited", 2),
    ]
    assert result.rows[0].n == 9 and result.rows[0].m == 17
    assert all(r.events == 0 for r in result.rows if r.variant == "baseline")


def test_empty_instance_list_writes_only_header():
    result = run_experiment([])
    stream = io.StringIO()
    write_csv(result.rows, stream)
    assert stream.getvalue() == ",".join(CSV_COLUMNS) + "\n"
    assert result.summary.instances == 0
    assert result.summary.nodes_equal_fraction == 1.0


def test_bad_file_is_named(tmp_path, fig1_path):
    bad = tmp_path / "bad.clq"
    bad.write_text("p edge 2 1\ne 1 1\n")
    with pytest.raises(DimacsParseError, match="bad.clq"):
        run_experiment([fig1_path, bad])


def test_missing_file_raises_os_error(tmp_path):
    with pytest.raises(OSError):
        run_experiment([tmp_path / "nope.clq"])


def test_csv_without_timings_is_reproducible(fig1_path, fig2_path):
    outputs = []
    for _ in range(2):
        stream = io.StringIO()
        write_csv(run_experiment([fig1_path, fig2_path]).rows, stream)
        outputs.append(stream.getvalue())
    assert outputs[0] == outputs[1]
    lines = outputs[0].splitlines()
    assert lines[1] == "fig1.clq,9,17,baseline,4,4,0,"


def test_csv_with_timings_fills_elapsed(fig1_path):
    stream = io.StringIO()
    write_csv(run_experiment([fig1_path]).rows, stream, timings=True)
    last = stream.getvalue().splitlines()[1].split(",")[-1]
    assert float(last) >= 0.0


@pytest.mark.parametrize(
    ("text", "expected"),
    [("0..199", range(0, 200)), ("5..5", range(5, 6)), ("7", range(7, 8))],
)
def test_parse_seed_range(text, expected):
    assert parse_seed_range(text) == expected


@pytest.mark.parametrize("text", ["9..3", "a..b", "", "1-5"])
def test_parse_seed_range_rejects(text):
    with pytest.raises(ConfigError):
        parse_seed_range(text)


def test_random_suite_ids():
    suite = random_suite(12, 0.5, range(3))
    assert [i.instance_id for i in suite] == ["gnp-12-0.5-0", "gnp-12-0.5-1", "gnp-12-0.5-2"]
    assert all(i.graph.n == 12 for i in suite)


def test_summary_counts(apex_graph):
    result = run_suite([Instance("apex", apex_graph), Instance("apex2", apex_graph)])
    summary = result.summary
    assert summary.instances == 2
    assert summary.instances_with_events == 2
    assert summary.instances_with_delta == 2
    assert summary.events_total == 2
    assert summary.latent_events_total == 2
    assert (summary.baseline_nodes_total, summary.inherited_nodes_total) == (8, 6)
    assert summary.nodes_equal_fraction == 0.0
    assert summarise(result.reports) == summary


def test_suite_rejects_threads():
    with pytest.raises(ConfigError):
        run_suite([], SearchConfig(threads=2))


def test_suite_writes_run_log(tmp_path, fig1_path):
    log_file = tmp_path / "runs.log"
    run_experiment([fig1_path], run_logger=RunLogger(log_file))
    text = log_file.read_text()
    assert "RUN: fig1.clq" in text
    assert text.count("omega=4") == 2
