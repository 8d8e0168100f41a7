# -*- encoding: utf-8 -*-

from console import corpus
from console.cli import EXIT_OK
from console.cli import EXIT_REJECTED
from console.cli import run
from matrices.idempotents import factor_id2


def failing_case(rng):
    raise corpus.CorpusFailure('expected failure')


class TestCorpus:

    def test_all_cases_pass(self):
        results = corpus.run_corpus()
        failed = [r for r in results if not r.ok]
        assert not failed
        assert [r.name for r in results] == [name for name, case in corpus.CASES]

    def test_table(self):
        results = [corpus.CaseResult('witness', True, 'fine'), corpus.CaseResult('intz', False, 'broken')]
        table = corpus.results_table(results)
        assert table.splitlines() == [
            'witness  pass  fine',
            'intz     FAIL  broken',
            '1/2 cases passed',
        ]

    def test_json(self):
        report = corpus.results_json([corpus.CaseResult('witness', True, 'fine')])
        assert report == {
            'kind': 'corpus-report',
            'cases': [{'name': 'witness', 'ok': True, 'detail': 'fine'}],
            'passed': 1,
            'failed': 0,
        }

    def test_command_line(self, monkeypatch):
        monkeypatch.setattr(corpus, 'CASES', corpus.CASES[:2])
        code, table = run(['corpus'])
        assert code == EXIT_OK
        assert table.endswith('2/2 cases passed\n')

    def test_failure_is_reported(self, monkeypatch, caplog):
        monkeypatch.setattr(corpus, 'CASES', (('broken', failing_case),))
        with caplog.at_level('INFO', logger='idemfact'):
            code, report = run(['corpus', '--json', '--seed', '1'])
        assert code == EXIT_REJECTED
        assert report['cases'] == [{'name': 'broken', 'ok': False, 'detail': 'CorpusFailure: expected failure'}]
        assert 'corpus case broken: FAIL' in caplog.text

    def test_sized_families(self, settings, rng):
        settings.CORPUS_SIZES = dict(settings.CORPUS_SIZES, tform=3, curve=2)
        assert corpus.case_random_tform(rng) == '3 integer normal forms'
        assert corpus.case_random_curve(rng).startswith('2 pairs on ')

    def test_random_id2_entries(self, settings, monkeypatch, rng):
        settings.CORPUS_SIZES = dict(settings.CORPUS_SIZES, id2=20)
        seen = []

        def recording_factor_id2(M):
            seen.append(M)
            return factor_id2(M)

        monkeypatch.setattr(corpus, 'factor_id2', recording_factor_id2)
        corpus.case_random_id2(rng)
        assert len(seen) == 20
        assert max(abs(e.payload) for M in seen for e in M.entries) > 2500
