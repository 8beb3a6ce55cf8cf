"""Tests for the verification service: check and ks pipelines, options, explain traces."""

import pytest

from app.core.config import Settings
from app.core.exceptions import CapExceededException, CoverException
from app.descent.theorem import CONSISTENT, NOT_APPLICABLE
from app.net.base import NetFlags
from app.schemas.report import digest_of
from app.verification.service import VerificationService


@pytest.fixture
def service():
    return VerificationService()


class TestRunOptions:
    def test_settings_defaults(self, service):
        options = service.resolve_options()
        assert options.cover_cap == service.config.cover_cap
        assert options.include_trivial_context is True
        assert options.threads >= 1

    def test_file_flags_over_settings(self, service):
        options = service.resolve_options(NetFlags(cover_cap=7, include_trivial_context=False))
        assert options.cover_cap == 7
        assert options.include_trivial_context is False

    def test_overrides_over_file_flags(self, service):
        options = service.resolve_options(
            NetFlags(cover_cap=7), {"cover_cap": 3, "section_cap": None, "threads": 4}
        )
        assert options.cover_cap == 3
        assert options.section_cap == service.config.section_cap
        assert options.threads == 4

    def test_injected_settings(self):
        service = VerificationService(Settings(cover_cap=11, threads=2))
        options = service.resolve_options()
        assert options.cover_cap == 11
        assert options.threads == 2


class TestCheckNet:
    async def test_spin_chain(self, service, nets_dir):
        outcome = await service.check_net(nets_dir / "spin_chain_n2.json")
        report = outcome.report
        assert outcome.verdict.biconditional == CONSISTENT
        assert report.command == "check"
        assert report.input_name == "spin_chain_n2"
        assert report.results_digest == digest_of(report.results)
        assert report.results["net"]["contexts"] == 9
        assert report.results["net"]["cauchy_slice"]["holds"] is True
        assert report.results["bohrified"]["functorial"] is True
        assert len(report.results["descent"]) == 2

    async def test_digest_independent_of_threads(self, service, nets_dir):
        path = nets_dir / "constant_commutative.json"
        one = await service.check_net(path, {"threads": 1})
        two = await service.check_net(path, {"threads": 2})
        assert one.report.results_digest == two.report.results_digest
        assert one.report.run.threads == 1
        assert two.report.run.threads == 2

    async def test_not_applicable(self, service, nets_dir):
        outcome = await service.check_net(nets_dir / "custom_additivity_violation.json")
        assert outcome.verdict.biconditional == NOT_APPLICABLE
        assert outcome.report.results["theorem"]["applicable"] is False

    async def test_cover_cap_override(self, service, nets_dir):
        with pytest.raises(CapExceededException):
            await service.check_net(nets_dir / "spin_chain_n2.json", {"cover_cap": 1})

    async def test_without_trivial_context(self, service, nets_dir):
        outcome = await service.check_net(
            nets_dir / "spin_chain_n2.json", {"include_trivial_context": False}
        )
        assert outcome.report.run.include_trivial_context is False
        assert any("not seeded" in n for n in outcome.report.results["notes"])

    async def test_report_json(self, service, nets_dir):
        outcome = await service.check_net(nets_dir / "global_qubit.json")
        text = outcome.report.to_json()
        assert '"results_digest"' in text
        assert '"biconditional": "consistent"' in text


class TestRunKS:
    async def test_cabello(self, service, ks_dir):
        report, ks = await service.run_ks(ks_dir / "cabello18.json", {"threads": 1})
        assert ks.sections.count == 0
        assert report.results["sections"] == 0
        assert report.results["dataset"] == "cabello18"

    async def test_digest_independent_of_threads(self, service, ks_dir):
        path = ks_dir / "cabello18.json"
        one, _ = await service.run_ks(path, {"threads": 1})
        four, _ = await service.run_ks(path, {"threads": 4})
        assert one.results_digest == four.results_digest

    async def test_single_basis_parallel(self, service, ks_dir):
        _, ks = await service.run_ks(ks_dir / "single_basis_d4.json", {"threads": 3})
        assert ks.sections.count == 4
        assert ks.sections.exact

    async def test_section_cap(self, service, ks_dir):
        _, ks = await service.run_ks(
            ks_dir / "single_basis_d4.json", {"section_cap": 2, "threads": 1}
        )
        assert ks.sections.count == 2
        assert not ks.sections.exact


class TestExplain:
    def test_constant_trace(self, service, nets_dir):
        trace = service.explain(nets_dir / "constant_commutative.json", "0;1")
        text = trace.render()
        assert "Comparison map f:" in text
        assert "Left adjoint L:" in text
        assert "Verdict: not local: left adjoint exists but not fully faithful" in text
        assert not trace.identities_hold

    def test_global_trace_has_no_adjoint(self, service, nets_dir):
        trace = service.explain(nets_dir / "global_qubit.json", "0;1")
        text = trace.render()
        assert "No left adjoint" in text
        assert "Verdict: not local: no left adjoint" in text

    def test_overlap_table(self, service, nets_dir):
        trace = service.explain(nets_dir / "constant_commutative.json", "0-1;1-2")
        assert "U n V" in trace.posets
        assert trace.analysis.local

    def test_bad_cover(self, service, nets_dir):
        with pytest.raises(CoverException):
            service.explain(nets_dir / "spin_chain_n2.json", "0")
        with pytest.raises(CoverException):
            service.explain(nets_dir / "spin_chain_n2.json", "0;")
        with pytest.raises(CoverException):
            service.explain(nets_dir / "spin_chain_n2.json", "0;5")
