"""Print every intermediate object for the six-element example band B:
the tree, support classes, S-sets, local order, chi vectors and h."""
from lrbembed import catalog
from lrbembed.cli import analysis_report, embed_report
from lrbembed.embedder import decide_embeddable
from lrbembed.formats import parse_order


def main():
    B = catalog.load("bandB")
    _, text, _ = analysis_report(B)
    print(text)
    v = decide_embeddable(B, parse_order(catalog.BAND_B_ORDER, B))
    rep, text = embed_report(B, v, trace=True)
    print(text)
    print("chi vectors")
    for c, entries in rep["chi"].items():
        print(f"  {c}: ({', '.join(e for e, _ in entries)})")


if __name__ == "__main__":
    main()
