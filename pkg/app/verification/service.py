"""Verification Service - Orchestrates net checks, descent runs and Kochen-Specker counts.

Per-cover descent checks and top-level section-search branches are independent,
so they run concurrently on worker threads; results are sorted before assembly.
"""

import asyncio
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from app import __version__
from app.core.config import Settings, get_settings
from app.core.logging import logger
from app.core.metrics import metrics_collector
from app.descent.bohrification import BohrifiedNet, bohrified_net
from app.descent.checker import Cover, DescentReport, check_cover, enumerate_covers
from app.descent.theorem import TheoremVerdict, theorem_check
from app.ingestion.net_spec import NetSpecLoader
from app.ingestion.projections import ProjectionDatasetLoader
from app.net.base import NetFlags, NetSpec
from app.net.contexts import NetContexts
from app.net.net import Net, SliceNet, build_net, restrict_to_slice
from app.schemas.report import ReportFile, RunInfo
from app.spacetime.regions import verify_cauchy_slice
from app.spectra.kochen_specker import KSReport, build_ks_report, prepare_ks
from app.spectra.sections import SectionCount, SectionSearch
from app.verification.explain import ExplainTrace, explain_cover, parse_cover


@dataclass(frozen=True)
class RunOptions:
    """Effective run settings: CLI flags over spec-file flags over environment settings."""

    cover_cap: int
    section_cap: int
    include_trivial_context: bool
    threads: int

    def info(self) -> RunInfo:
        return RunInfo(
            threads=self.threads,
            cover_cap=self.cover_cap,
            section_cap=self.section_cap,
            include_trivial_context=self.include_trivial_context,
        )


@dataclass
class PreparedNet:
    spec: NetSpec
    net: Net
    slice_net: SliceNet
    contexts: NetContexts


@dataclass
class CheckOutcome:
    report: ReportFile
    verdict: TheoremVerdict


class VerificationService:
    """
    Orchestrates the check and ks pipelines.
    Loads inputs, resolves run options, fans out independent work, assembles reports.
    """

    def __init__(self, config: Optional[Settings] = None):
        self.config = config or get_settings()
        self.net_loader = NetSpecLoader(self.config.ambient_dim_cap)
        self.dataset_loader = ProjectionDatasetLoader()

    def resolve_options(
        self, flags: Optional[NetFlags] = None, overrides: Optional[dict[str, Any]] = None
    ) -> RunOptions:
        flags = flags or NetFlags()
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}

        def pick(name: str) -> Any:
            if name in overrides:
                return overrides[name]
            from_file = getattr(flags, name, None)
            if from_file is not None:
                return from_file
            return getattr(self.config, name)

        return RunOptions(
            cover_cap=pick("cover_cap"),
            section_cap=pick("section_cap"),
            include_trivial_context=pick("include_trivial_context"),
            threads=max(1, overrides.get("threads", self.config.threads)),
        )

    def prepare(self, spec: NetSpec, options: RunOptions) -> PreparedNet:
        with metrics_collector.timed("build_net"):
            net = build_net(spec, self.config.region_cap)
            slice_net = restrict_to_slice(net)
        with metrics_collector.timed("build_contexts"):
            contexts = NetContexts(
                slice_net,
                include_trivial_context=options.include_trivial_context,
                context_cap=self.config.context_cap,
            )
        return PreparedNet(spec, net, slice_net, contexts)

    async def check_covers(
        self, prepared: PreparedNet, covers: list[Cover], threads: int
    ) -> list[DescentReport]:
        """Run per-cover checks concurrently, at most `threads` at a time."""
        semaphore = asyncio.Semaphore(threads)

        async def one(cover: Cover) -> DescentReport:
            async with semaphore:
                return await asyncio.to_thread(
                    check_cover, prepared.slice_net, prepared.contexts, cover[0], cover[1]
                )

        reports = await asyncio.gather(*(one(c) for c in covers))
        return sorted(reports, key=lambda r: r.sort_key)

    async def check_net(
        self, path: Path, overrides: Optional[dict[str, Any]] = None
    ) -> CheckOutcome:
        """Full pipeline for one net spec: axioms, Bohrified net, descent, theorem."""
        start_time = time.perf_counter()
        metrics_collector.reset()
        spec = self.net_loader.load(path)
        input_digest = self.net_loader.last_digest
        options = self.resolve_options(spec.flags, overrides)
        prepared = self.prepare(spec, options)

        with metrics_collector.timed("bohrified_net"):
            bohrified = bohrified_net(prepared.net, prepared.contexts)
        covers = enumerate_covers(prepared.slice_net, options.cover_cap)
        logger.info(f"{spec.name}: checking {len(covers)} covers on {options.threads} thread(s)")
        with metrics_collector.timed("descent"):
            reports = await self.check_covers(prepared, covers, options.threads)
        with metrics_collector.timed("axioms"):
            verdict = await asyncio.to_thread(
                theorem_check, prepared.net, prepared.contexts, reports
            )

        results = self._check_results(prepared, bohrified, verdict)
        timing = metrics_collector.snapshot()
        timing["total_s"] = round(time.perf_counter() - start_time, 3)
        report = ReportFile(
            tool=self.config.app_name,
            version=__version__,
            command="check",
            input_name=spec.name,
            input_digest=input_digest,
            results=results,
            run=options.info(),
            timing=timing,
        ).seal()
        logger.info(f"{spec.name}: biconditional {verdict.biconditional}")
        return CheckOutcome(report, verdict)

    def _check_results(
        self, prepared: PreparedNet, bohrified: BohrifiedNet, verdict: TheoremVerdict
    ) -> dict[str, Any]:
        net = prepared.net
        cauchy = verify_cauchy_slice(net.window)
        results = verdict.to_dict()
        results["net"] = {
            "name": net.name,
            "family": prepared.spec.family.value,
            "window": net.window.describe(),
            "ambient_dim": net.ambient_dim,
            "regions": len(net.regions),
            "contexts": len(prepared.contexts.global_poset),
            "include_trivial_context": prepared.contexts.include_trivial_context,
            "cauchy_slice": {
                "paths": cauchy.paths,
                "violations": cauchy.violations,
                "holds": cauchy.holds,
            },
        }
        results["bohrified"] = {
            "spaces": len(bohrified.spaces),
            "structure_maps": len(bohrified.maps),
            "functorial": bohrified.functorial,
            "epsilon_inclusions": bohrified.epsilon_inclusions,
        }
        results["descent"] = [r.to_dict() for r in verdict.reports]
        return results

    def explain(
        self, path: Path, cover: str, overrides: Optional[dict[str, Any]] = None
    ) -> ExplainTrace:
        u, v = parse_cover(cover)
        spec = self.net_loader.load(path)
        prepared = self.prepare(spec, self.resolve_options(spec.flags, overrides))
        return explain_cover(prepared.slice_net, prepared.contexts, u, v)

    async def count_sections(
        self, search: SectionSearch, threads: int
    ) -> SectionCount:
        branches = search.branches()
        if threads <= 1 or len(branches) < 2:
            return await asyncio.to_thread(search.run)
        semaphore = asyncio.Semaphore(threads)

        async def one(k: int) -> SectionCount:
            async with semaphore:
                return await asyncio.to_thread(search.run, k)

        parts = await asyncio.gather(*(one(k) for k in branches))
        total = SectionCount(0, True, search.cap)
        for part in parts:
            total = total.merge(part)
        return total

    async def run_ks(
        self, path: Path, overrides: Optional[dict[str, Any]] = None
    ) -> tuple[ReportFile, KSReport]:
        start_time = time.perf_counter()
        metrics_collector.reset()
        dataset = self.dataset_loader.load(path)
        options = self.resolve_options(None, overrides)
        with metrics_collector.timed("contexts"):
            poset, presheaf = prepare_ks(
                dataset.dimension,
                dataset.projections,
                dataset.bases,
                options.include_trivial_context,
            )
        with metrics_collector.timed("sections"):
            search = SectionSearch(poset, presheaf, options.section_cap)
            sections = await self.count_sections(search, options.threads)
        ks = build_ks_report(dataset.dimension, dataset.projections, poset, sections)
        results = {"dataset": dataset.name, **ks.to_dict()}
        timing = metrics_collector.snapshot()
        timing["total_s"] = round(time.perf_counter() - start_time, 3)
        report = ReportFile(
            tool=self.config.app_name,
            version=__version__,
            command="ks",
            input_name=dataset.name,
            input_digest=self.dataset_loader.last_digest,
            results=results,
            run=options.info(),
            timing=timing,
        ).seal()
        return report, ks


verification_service = VerificationService()
