import sys

import matplotlib as mpl

_PLOTLY_DASH = {"solid": "solid", "dashed": "dash", "dotted": "dot"}


def is_plotly_figure(x):
    """Return True if the x is a plotly figure."""
    try:
        plotly = sys.modules["plotly"]
    except KeyError:
        return False
    return isinstance(x, plotly.graph_objects.Figure)


def resolve_axes(ax, plot_backend):
    """Return the axes to draw onto and its backend.

    If ax is None, a new one is created for `plot_backend`.
    """
    if ax is None:
        if plot_backend == "matplotlib":
            import matplotlib.pyplot as plt

            return plt.gca(), "matplotlib"
        import plotly.graph_objects as go

        return go.Figure(), "plotly"
    elif isinstance(ax, mpl.axes.Axes):
        return ax, "matplotlib"
    elif is_plotly_figure(ax):
        return ax, "plotly"
    msg = (
        "The ax argument must be None, a matplotlib Axes or a plotly Figure, "
        f"got {type(ax)}."
    )
    raise ValueError(msg)


def line_color(i, plot_backend):
    if plot_backend == "matplotlib":
        return f"C{i % 10}"
    # plotly default palette in hex
    import plotly.express as px

    colors = px.colors.qualitative.Plotly
    return colors[i % len(colors)]


def add_line(ax, x, y, *, color, linestyle, label, showlegend=True):
    """Draw a line, optionally without legend entry."""
    if isinstance(ax, mpl.axes.Axes):
        ax.plot(
            x,
            y,
            color=color,
            linestyle=linestyle,
            label=label if showlegend else "_nolegend_",
        )
    else:
        ax.add_scatter(
            x=x,
            y=y,
            mode="lines",
            line={"color": color, "dash": _PLOTLY_DASH[linestyle]},
            name=label,
            legendgroup=label,
            showlegend=showlegend,
        )


def add_markers(ax, x, y, *, label):
    if isinstance(ax, mpl.axes.Axes):
        ax.scatter(x, y, marker="o", color="k", zorder=3, label=label)
    else:
        ax.add_scatter(
            x=x, y=y, mode="markers", marker={"color": "black"}, name=label
        )


def set_labels(ax, *, title, xlabel, ylabel):
    if isinstance(ax, mpl.axes.Axes):
        ax.legend()
        ax.set_title(title)
        ax.set(xlabel=xlabel, ylabel=ylabel)
    else:
        ax.update_layout(xaxis_title=xlabel, yaxis_title=ylabel, title=title)


def axes_texts(ax):
    """Title, axis labels and legend entries of a matplotlib or plotly plot."""
    if isinstance(ax, mpl.axes.Axes):
        return {
            "title": ax.get_title(),
            "xlabel": ax.get_xlabel(),
            "ylabel": ax.get_ylabel(),
            "legend": [t.get_text() for t in ax.get_legend().get_texts()],
        }
    return {
        "title": ax.layout.title.text,
        "xlabel": ax.layout.xaxis.title.text,
        "ylabel": ax.layout.yaxis.title.text,
        "legend": [d.name for d in ax.data if d.showlegend is None or d.showlegend],
    }
