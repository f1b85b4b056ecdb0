"""Run configurations for the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class TableRunConfig:
    """Which class tables to reproduce and over which rings."""

    groups: tuple[str, ...] = ("D4", "G2", "F4", "E6", "E7", "E8")
    odd_rings: tuple[int, ...] = (0,)      # 0 is Q; add 3, 5, 7 to cross-check
    include_vmin: bool = True


@dataclass(frozen=True)
class TorusSurveyConfig:
    cases: tuple[tuple[str, str], ...] = (
        ("G2", "none"), ("B3", "none"), ("D4", "none"), ("D4", "tau"), ("F4", "none"),
    )
    sample_q: tuple[int, ...] = (2, 3, 4)


@dataclass(frozen=True)
class E7ExampleConfig:
    rings: tuple[int, ...] = (0, 3, 5, 7)
    battery: bool = True


@dataclass
class OutputConfig:
    path: str | None = None                # None: stdout
    fields: list[str] = field(default_factory=list)
