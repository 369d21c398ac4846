import json
from typing import List

import pytest

from ringbench import constructions as c
from ringbench.catalog import ENTRIES, build_ring, get_entry
from ringbench.checks import (
    CheckConfig,
    Status,
    SuiteReport,
    TheoremCheck,
    TriangularZ3,
    VerdictReport,
    get_check,
    get_checks,
    run_check,
    run_entry_checks,
    run_subject_checks,
    run_suite,
)
from ringbench.core import FiniteRing
from ringbench.exceptions import OracleCapExceeded, SchemaMismatch, UnknownCheck

CHECK_IDS = {
    'T1.1', 'L2.1', 'T2.2', 'C2.3', 'R2.3', 'C2.4', 'E2.5', 'L2.6', 'T2.7', 'C2.8',
    'T3.1', 'C3.2', 'T3.3', 'C3.4', 'C3.5', 'E3.6', 'T3.7', 'C3.8', 'R3.9', 'E3.9',
    'T3.10', 'C3.11', 'L3.13', 'T3.14', 'L3.15', 'T3.16', 'G7',
    'T4.1', 'C4.2', 'C4.3', 'R4.1', 'P4.4', 'P4.5', 'E4.6', 'L4.7', 'T4.8', 'C4.9',
    'L4.11', 'L4.12', 'T4.13', 'C4.14',
}


@pytest.fixture()
def completed_reports():
    received: List[VerdictReport] = []

    def collect(sender, check, report, **kwargs):
        received.append(report)

    TheoremCheck.completed.connect(collect, weak=False)
    yield received
    TheoremCheck.completed.disconnect(collect)


def test_registry():
    checks = get_checks()
    assert set(checks) == CHECK_IDS
    assert list(checks)[:3] == ['T1.1', 'L2.1', 'T2.2']
    assert str(get_check('T3.3')) == 'T3.3'
    with pytest.raises(UnknownCheck):
        get_check('T9.99')


def test_config_from_settings(settings):
    settings.RINGBENCH_SEED = 7
    config = CheckConfig.from_settings(seed=None, max_order=64)
    assert config.seed == 7
    assert config.max_order == 64
    assert CheckConfig.from_dict(config.as_dict()) == config


def test_example_4_6(t2z3: FiniteRing):
    report = run_check('E4.6', t2z3)
    assert report.status == Status.PASS
    assert report.inputs == (t2z3.content_hash,)
    assert report.payload['claims']['J-clean-like']['holds']


def test_example_check_skips_other_rings(z4: FiniteRing):
    report = run_check('E4.6', z4)
    assert report.status == Status.SKIPPED
    assert 'E4.6' in report.payload['reason']


def test_two_primal_characterization_on_m2z2(m2z2: FiniteRing):
    report = run_check('T3.3', m2z2)
    assert report.status == Status.PASS
    claims = report.payload['claims']
    assert not claims['strongly periodic']['holds']
    assert not claims['2-primal and weakly periodic']['holds']


def test_morita_periodicity_certified_chain(e39_context: c.MoritaContextSpec):
    report = run_check('T2.2', e39_context)
    assert report.status == Status.PASS
    chain = report.payload['chain']
    assert chain['holds']
    assert chain['p'] == max(chain['s'], chain['t'])


def test_morita_periodicity_on_generalized_matrix(z4: FiniteRing):
    report = run_check('T2.2', c.generalized_context(z4, 2))
    assert report.status == Status.PASS


def test_morita_periodicity_skips_non_nilpotent_images(z2: FiniteRing):
    # M_(1)(Z2): the pairings reach 1
    report = run_check('T2.2', c.generalized_context(z2, 1))
    assert report.status == Status.SKIPPED


def test_schema_mismatch(m2z2: FiniteRing, e39_context: c.MoritaContextSpec):
    with pytest.raises(SchemaMismatch):
        run_check('T2.2', m2z2)
    with pytest.raises(SchemaMismatch):
        run_check('T3.3', e39_context)


def test_example_3_6(r4: FiniteRing):
    report = run_check('E3.6', r4)
    assert report.status == Status.PASS
    assert report.payload['witness']['kind'] == 'nil-semicommutative'


def test_sequence_vanishing_check(z4: FiniteRing, m2z2: FiniteRing):
    assert run_check('T4.13', z4).status == Status.PASS
    report = run_check('T4.13', m2z2)
    assert report.status == Status.SKIPPED
    assert 'witness verified: True' in report.payload['reason']


@pytest.mark.parametrize('check_id', ['T1.1', 'L2.1', 'T3.1', 'T3.3', 'L4.7', 'T4.8', 'P4.5'])
@pytest.mark.parametrize('ring_name', ['z4', 'z6', 'gf4', 'm2z2', 't2z3', 'r3'])
def test_biconditionals_hold(request, check_id: str, ring_name: str):
    ring = request.getfixturevalue(ring_name)
    assert run_check(check_id, ring).status == Status.PASS


def test_oracle_cap_is_inconclusive(monkeypatch, t2z3: FiniteRing):
    def evaluate(self, ring, config):
        raise OracleCapExceeded(ring.order, 8)

    monkeypatch.setattr(TriangularZ3, 'evaluate', evaluate)
    report = run_check('E4.6', t2z3)
    assert report.status == Status.INCONCLUSIVE


def test_completed_signal(completed_reports: List[VerdictReport], z4: FiniteRing):
    report = run_check('T1.1', z4)
    assert completed_reports == [report]


def test_subject_checks_without_context(completed_reports: List[VerdictReport], z2: FiniteRing):
    reports = run_subject_checks(z2, check_ids=['T1.1', 'T2.2'])
    assert [report.check_id for report in reports] == ['T1.1', 'T2.2']
    assert reports[1].status == Status.SKIPPED
    assert reports[1].payload == {'reason': 'needs a Morita context'}
    assert len(completed_reports) == 2


def test_entry_checks_use_context():
    reports = run_entry_checks('E3.9', check_ids=['T2.2', 'T3.7'])
    assert [report.status for report in reports] == [Status.PASS, Status.PASS]


def test_suite():
    suite = run_suite([get_entry('Z2')])
    assert suite.passed
    counts = suite.counts()
    assert counts['fail'] == 0
    assert sum(counts.values()) == len(CHECK_IDS)
    data = json.loads(suite.to_json())
    assert data['counts'] == counts
    assert len(data['reports']) == len(CHECK_IDS)


@pytest.mark.parametrize('name', [entry.name for entry in ENTRIES])
def test_catalog_entry_passes_every_check(name: str):
    reports = run_entry_checks(name)
    assert len(reports) == len(CHECK_IDS)
    assert [report.check_id for report in reports if report.status == Status.FAIL] == []


def test_named_examples_pass(twisted: FiniteRing):
    assert run_check('G7', twisted).status == Status.PASS
    assert run_check('E3.9', build_ring('E3.9')).status == Status.PASS


def test_lowered_oracle_caps_reach_the_radical_oracles(t2z3: FiniteRing):
    report = run_check('T3.1', t2z3)
    assert report.status == Status.PASS
    claims = report.payload['radical oracles']['claims']
    assert len(claims) == 2
    assert all(claim['holds'] for claim in claims.values())
    config = CheckConfig(oracle_max_order=8, maximal_ideal_max_order=8)
    report = run_check('T3.1', t2z3, config)
    assert report.status == Status.PASS
    assert report.payload['radical oracles'] == {'reason': 'order 9 is above the oracle caps'}
    assert run_check('C3.4', t2z3, config).status == Status.SKIPPED


def test_suite_on_celery(settings):
    settings.RINGBENCH_SUITE_BACKEND = 'celery'
    config = CheckConfig.from_settings()
    suite = run_suite([get_entry('Z2'), get_entry('Z4')], config, ['T1.1', 'T3.3'])
    assert [report.check_id for report in suite.reports] == ['T1.1', 'T1.1', 'T3.3', 'T3.3']
    assert suite.passed
    inline = run_entry_checks('Z4', config, ['T1.1'])
    assert inline[0].inputs in {report.inputs for report in suite.reports}


def test_suite_needs_entries():
    with pytest.raises(ValueError):
        run_suite([])


def test_report_round_trip(z4: FiniteRing):
    report = run_check('T3.3', z4)
    assert VerdictReport.from_dict(json.loads(json.dumps(report.as_dict()))).status == Status.PASS
    suite = SuiteReport([report])
    assert suite.as_dict()['counts']['pass'] == 1
