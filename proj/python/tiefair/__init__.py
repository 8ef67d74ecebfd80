"""Fairness of access to influencers in social graphs."""

from ._tiefair import (
    BaselineFairness,
    EdgeListLoad,
    FairnessReport,
    Graph,
    InfluencerSet,
    ParseError,
    SimulationTrace,
    barabasi_albert,
    baseline_fairness,
    betweenness,
    component_count,
    distances,
    erdos_renyi,
    fairness_index,
    graph_fairness,
    graph_from_edges,
    influencer_count,
    is_connected,
    kl_distance,
    load_edge_list,
    manual_influencers,
    manual_influencers_by_label,
    mutual_friends,
    simulate,
    top_influencers,
)

__all__ = [name for name in dir() if not name.startswith("_")]
