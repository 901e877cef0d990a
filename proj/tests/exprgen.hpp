#pragma once

#include <memory>
#include <random>

#include "cpw/algebra.hpp"

namespace testing {

// random expression tree over ctx's generators, depth-bounded
inline cpw::ExprPtr random_expr(std::mt19937_64& rng, const cpw::AlgebraContext& ctx,
                                int depth) {
    using cpw::ExprNode;
    const cpw::Graph& g = ctx.graph();
    auto node = std::make_unique<ExprNode>();
    const bool leaf = depth <= 0 || rng() % 3 == 0;
    if (leaf) {
        const std::size_t nv = g.vertices().size();
        const std::size_t ne = g.edges().size();
        std::size_t pick = rng() % (nv + 2 * ne);
        if (pick < nv) {
            node->kind = ExprNode::Kind::Vertex;
            node->id = g.vertices()[pick];
        } else if (pick < nv + ne) {
            node->kind = ExprNode::Kind::Edge;
            node->id = g.edges()[pick - nv].id;
        } else {
            node->kind = ExprNode::Kind::GhostEdge;
            node->id = g.edges()[pick - nv - ne].id;
        }
        return node;
    }
    switch (rng() % 3) {
        case 0: {
            node->kind = ExprNode::Kind::Sum;
            std::size_t n = 2 + rng() % 2;
            for (std::size_t i = 0; i < n; ++i)
                node->summands.emplace_back(rng() % 2 ? 1 : -1,
                                            random_expr(rng, ctx, depth - 1));
            return node;
        }
        case 1: {
            node->kind = ExprNode::Kind::Product;
            long long num = static_cast<long long>(rng() % 7) - 3;
            if (num == 0) num = 1;
            node->coefficient =
                cpw::Scalar(cpw::BigInt(num), cpw::BigInt(1 + rng() % 3),
                            ctx.characteristic());
            std::size_t n = 2 + rng() % 2;
            for (std::size_t i = 0; i < n; ++i)
                node->factors.push_back(random_expr(rng, ctx, depth - 1));
            return node;
        }
        default: {
            node->kind = ExprNode::Kind::Star;
            node->child = random_expr(rng, ctx, depth - 1);
            return node;
        }
    }
}

} // namespace testing
