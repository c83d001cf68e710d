import math

from rotation_toolkit.comparison.crossings import staircase_sweep
from rotation_toolkit.comparison.identities import verify_cor_3_3, verify_cor_3_3_origin, verify_prop_2_8
from rotation_toolkit.config import ExperimentConfig
from rotation_toolkit.domain.reports import ROW_COLUMNS, EstimateReport, IdentityCheck
from rotation_toolkit.domain.results import ExperimentResult, SummaryLine
from rotation_toolkit.domain.types import Command, Estimator
from rotation_toolkit.estimators.ergodic import ergodic_formula_check
from rotation_toolkit.estimators.orbit import orbit_rotation
from rotation_toolkit.estimators.rotation import OffsetSampler, rho_estimate, rho_nonuniform
from rotation_toolkit.handlers.base import CommandHandler
from rotation_toolkit.sde.brownian import BrownianStream
from rotation_toolkit.sde.rotation import rot_continuous, rot_formula_estimate
from rotation_toolkit.sde.sampling import or_sampling_counterexample, sampling_experiment

IDENTITY_COLUMNS = ["form", "lhs", "rhs", "residual", "se_lhs", "se_rhs"]


def _summary(label: str, report: EstimateReport) -> SummaryLine:
    return SummaryLine(label=label, value=report.value, se=report.se_proxy, n=report.n, seed=report.seed)


def _identity_result(command: Command, checks: dict[str, IdentityCheck], n: int, seed: int) -> ExperimentResult:
    extra_columns = sorted({key for check in checks.values() for key in check.extras})
    records = [{"form": form, **check.as_row(), **check.extras} for form, check in checks.items()]
    summaries = []
    for form, check in checks.items():
        summaries.append(SummaryLine(label=f"{command.value}[{form}.lhs]", value=check.lhs, se=check.se_lhs, n=n, seed=seed))
        summaries.append(SummaryLine(label=f"{command.value}[{form}.rhs]", value=check.rhs, se=check.se_rhs, n=n, seed=seed))
    return ExperimentResult(
        command=command,
        columns=IDENTITY_COLUMNS + extra_columns,
        records=records,
        summaries=summaries,
    )


class RhoHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        report = rho_estimate(system, config.params, config.x0 or 0.0, config.n)
        return ExperimentResult(
            command=Command.RHO,
            columns=ROW_COLUMNS,
            records=[report.as_row()],
            summaries=[_summary(Command.RHO.value, report)],
        )


class OrbitHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        report, _ = orbit_rotation(system, config.s0, config.n)
        return ExperimentResult(
            command=Command.ORBIT,
            columns=ROW_COLUMNS,
            records=[report.as_row()],
            summaries=[_summary(Command.ORBIT.value, report)],
        )


class NonuniformHandler(CommandHandler):
    EXTRA_COLUMNS = ["uniform_value", "offset_mean", "telescoping_residual"]

    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        offsets = OffsetSampler(values=tuple(config.offsets), probs=tuple(config.offsets.values()))
        report = rho_nonuniform(system, config.params, offsets, config.x0 or 0.0, config.n)
        return ExperimentResult(
            command=Command.NONUNIFORM,
            columns=ROW_COLUMNS + self.EXTRA_COLUMNS,
            records=[{**report.as_row(), **{key: report.extras[key] for key in self.EXTRA_COLUMNS}}],
            summaries=[_summary(Command.NONUNIFORM.value, report)],
        )


class ErgodicCheckHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        check = ergodic_formula_check(system, config.params, config.n, config.n_prob or config.n, config.bins)
        return _identity_result(Command.ERGODIC_CHECK, {"ergodic": check}, config.n, system.seed)


class CompareHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        check = verify_prop_2_8(
            system,
            config.params,
            config.target,
            n_rho=config.n,
            n_prob=config.n_prob or config.n,
            independent_streams=config.independent_streams,
            x0=config.x0 or 0.0,
        )
        return _identity_result(Command.COMPARE, {"comparison": check}, config.n, system.seed)


class StaircaseHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        rows = staircase_sweep(system, config.params, config.grid, config.n, config.axis, config.threads)
        return ExperimentResult(
            command=Command.STAIRCASE,
            columns=["grid_value", "k", "prob"],
            records=[row.as_row() for row in rows],
        )


class Cor33Handler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        system = config.resolve_system()
        checks = {
            "general": verify_cor_3_3(system, config.params, config.s0, config.n),
            "origin": verify_cor_3_3_origin(system, config.s0, config.n),
        }
        return _identity_result(Command.COR33, checks, config.n, system.seed)


class SdeRotHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        vf = config.vector_field
        stream = BrownianStream(seed=config.effective_seed, dt_internal=config.dt_internal, dimension=vf.dimension)
        x0 = config.x0 or 0.0
        direct = rot_continuous(vf, stream, x0, config.horizon)
        formula = EstimateReport(
            estimator=Estimator.SDE_ROT_FORMULA,
            value=rot_formula_estimate(vf, stream, config.horizon, config.bins, x0),
            n=direct.n,
            se_proxy=math.nan,
            seed=stream.seed,
        )
        return ExperimentResult(
            command=Command.SDE_ROT,
            columns=ROW_COLUMNS + ["tail"],
            records=[{**report.as_row(), "tail": report.extras.get("tail")} for report in (direct, formula)],
            summaries=[_summary("sde-rot", direct), _summary("sde-rot[formula]", formula)],
        )


class SamplingHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        seed = config.effective_seed
        ladder = sampling_experiment(
            config.vector_field,
            config.params,
            config.dts,
            config.n,
            seed,
            substeps=config.substeps,
            x0=config.x0,
        )
        return ExperimentResult(
            command=Command.SAMPLING,
            columns=["delta_t", "rho_rescaled", "se", "crossing_diag"],
            records=[row.as_row() for row in ladder.rows],
            summaries=[
                SummaryLine(label=f"sampling[dt={row.delta_t}]", value=row.rho_rescaled, se=row.se, n=config.n, seed=seed)
                for row in ladder.rows
            ],
        )


class NsCounterexampleHandler(CommandHandler):
    def handle(self, config: ExperimentConfig) -> ExperimentResult:
        rows = or_sampling_counterexample(config.dt, config.s0_list, config.n, config.vector_field, config.substeps)
        return ExperimentResult(
            command=Command.NS_COUNTEREXAMPLE,
            columns=["s0", "OR"],
            records=[row.as_row() for row in rows],
            summaries=[
                SummaryLine(label=f"ns-counterexample[s0={row.s0}]", value=row.orbit_rotation, se=math.nan, n=config.n)
                for row in rows
            ],
        )
