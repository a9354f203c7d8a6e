from jinja2 import Template

from .state import RadiusResult, SuiteReport, WitnessReport


class SummaryRenderer:
    """Plain-text summaries of reports for stderr."""

    def render_suite(self, report: SuiteReport, limit: int = 10) -> str:
        """Summary of a verification suite, listing at most ``limit`` violations."""
        template = Template(
            "Suite {{ report.suite }} (seed {{ report.seed }}, order {{ report.order }}): "
            "{{ 'PASS' if report.passed else 'FAIL' }}\n"
            "  {{ report.checks }} checks over {{ report.trials }} trial(s), "
            "worst margin {{ '%.3e' | format(report.worst_margin) }}\n"
            "{% for label in report.violation_labels[:limit] %}"
            "  violation: {{ label }}\n"
            "{% endfor %}"
            "{% if report.violations > limit %}  ... {{ report.violations - limit }} more\n{% endif %}"
        )
        return template.render(report=report, limit=limit)

    def render_witness(self, theorem: str, report: WitnessReport) -> str:
        template = Template(
            "Witness {{ theorem }} for {{ report.family.tag }}"
            "{% if report.parameter is not none %} ({{ report.parameter }}){% endif %}"
            "{% if report.p is not none %}, p={{ report.p }}{% endif %}:\n"
            "  found     {{ '%.12f' | format(report.threshold_found) }}\n"
            "  predicted {{ '%.12f' | format(report.threshold_predicted) }}\n"
            "  |diff|    {{ '%.3e' | format(report.difference) }}\n"
            "  bracket   [{{ '%.15f' | format(report.bracket_lo) }}, {{ '%.15f' | format(report.bracket_hi) }}], "
            "residual {{ '%.2e' | format(report.residual) }}\n"
        )
        return template.render(theorem=theorem, report=report)

    def render_radius(self, result: RadiusResult) -> str:
        template = Template(
            "{{ result.name }} = {{ '%.15f' | format(result.value) }} "
            "in [{{ '%.15f' | format(result.bracket_lo) }}, {{ '%.15f' | format(result.bracket_hi) }}], "
            "residual {{ '%.2e' | format(result.residual) }}, {{ result.iterations }} iterations\n"
        )
        return template.render(result=result)
