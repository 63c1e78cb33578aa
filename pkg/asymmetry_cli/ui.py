"""Help screen and shared console rendering."""

from rich.table import Table

from asymmetry_cli._version import __version__
from asymmetry_cli.config import COLORS, console
from asymmetry_cli.registry import DEFAULT_PAULI, MODELS


def models_table() -> Table:
    """Table of the built-in models."""
    table = Table(title="Built-in models", show_header=True, header_style=f"bold {COLORS['primary']}")
    table.add_column("Model", style="bold")
    table.add_column("Parameter")
    table.add_column("Default Pauli", style="dim")
    table.add_column("Description")
    for info in MODELS.values():
        table.add_row(
            info.name,
            f"--{info.parameter}" if info.parameter else "-",
            DEFAULT_PAULI.get(info.name, "-"),
            info.description,
        )
    return table


def show_help() -> None:
    """Show help information."""
    console.print()
    console.print(f"asymmetry {__version__}", style=f"bold {COLORS['primary']}")
    console.print("Algebraic asymmetry degree of q-deformed operators", style=COLORS["dim"])
    console.print()

    console.print("[bold]Usage:[/bold]", style=COLORS["primary"])
    console.print("  asymmetry compute --model MODEL [--M M | --N N] --gamma G   One value as JSON")
    console.print("  asymmetry sweep --model MODEL --gamma-min A --gamma-max B   Grid as CSV/JSON")
    console.print("  asymmetry sweep --job JOB.yaml                              Grid from a job file")
    console.print("  asymmetry verify [--model MODEL] [--out REPORT.json]        Closed forms vs oracle")
    console.print("  asymmetry mesh --gamma G [--format obj|csv] [--out FILE]    Deformed sphere")
    console.print("  asymmetry bench [--sizes 10,50,100,200]                     Tensor-backend timing")
    console.print("  asymmetry models                                            List built-in models")
    console.print("  asymmetry help                                              Show this help message")
    console.print("  asymmetry --version                                         Show version")
    console.print()

    console.print("[bold]Options:[/bold]", style=COLORS["primary"])
    console.print("  -v, --verbose                 Debug logging on stderr")
    console.print("  --backend dense|tensor|auto   Operator backend (default: auto)")
    console.print("  --pauli half|full             Pauli normalization (casimir: half, chain: full)")
    console.print("  --bonds open|periodic         Chain bonds (default: open)")
    console.print("  --boundary as-written|mirrored  Chain boundary sign (default: mirrored)")
    console.print("  --variant as-written|corrected  Closed form for chain-inf (default: corrected)")
    console.print("  --threads N                   Sweep worker threads (default: ASYM_THREADS)")
    console.print()

    console.print("[bold]Examples:[/bold]", style=COLORS["primary"])
    console.print(
        "  asymmetry compute --model casimir --gamma 1      # 16(cosh 1 - 1)/(3 cosh 1)",
        style=COLORS["dim"],
    )
    console.print(
        "  asymmetry sweep --model chain --N 3,50,inf       # Three curves over [-3, 3]",
        style=COLORS["dim"],
    )
    console.print(
        "  asymmetry mesh --gamma 5 --out sphere.obj        # Flattened sphere",
        style=COLORS["dim"],
    )
    console.print()
