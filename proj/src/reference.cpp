/*
 * Copyright 2026 The RITR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ritr/eval.hpp"

#include <algorithm>

namespace ritr::eval {

namespace {

// clang-format off
constexpr ReferenceEntry kTable[] = {
    {"Cora", "missing60", "NeighAggre", "Recall@10", 9.06},
    {"Cora", "missing60", "VAE", "Recall@10", 8.87},
    {"Cora", "missing60", "GCN", "Recall@10", 12.71},
    {"Cora", "missing60", "GraphSage", "Recall@10", 12.84},
    {"Cora", "missing60", "GAT", "Recall@10", 13.5},
    {"Cora", "missing60", "Hers", "Recall@10", 12.26},
    {"Cora", "missing60", "GraphRNA", "Recall@10", 13.95},
    {"Cora", "missing60", "ARWMF", "Recall@10", 12.91},
    {"Cora", "missing60", "SVGA", "Recall@10", 16.06},
    {"Cora", "missing60", "SAT", "Recall@10", 15.08},
    {"Cora", "missing60", "ITR", "Recall@10", 16.82},
    {"Cora", "missing60", "RITR", "Recall@10", 17.32},
    {"Cora", "missing60", "NeighAggre", "Recall@20", 14.13},
    {"Cora", "missing60", "VAE", "Recall@20", 12.28},
    {"Cora", "missing60", "GCN", "Recall@20", 17.72},
    {"Cora", "missing60", "GraphSage", "Recall@20", 17.84},
    {"Cora", "missing60", "GAT", "Recall@20", 18.12},
    {"Cora", "missing60", "Hers", "Recall@20", 17.23},
    {"Cora", "missing60", "GraphRNA", "Recall@20", 20.43},
    {"Cora", "missing60", "ARWMF", "Recall@20", 18.13},
    {"Cora", "missing60", "SVGA", "Recall@20", 23.17},
    {"Cora", "missing60", "SAT", "Recall@20", 21.82},
    {"Cora", "missing60", "ITR", "Recall@20", 23.69},
    {"Cora", "missing60", "RITR", "Recall@20", 24.47},
    {"Cora", "missing60", "NeighAggre", "Recall@50", 19.61},
    {"Cora", "missing60", "VAE", "Recall@50", 21.16},
    {"Cora", "missing60", "GCN", "Recall@50", 29.62},
    {"Cora", "missing60", "GraphSage", "Recall@50", 29.72},
    {"Cora", "missing60", "GAT", "Recall@50", 29.72},
    {"Cora", "missing60", "Hers", "Recall@50", 27.99},
    {"Cora", "missing60", "GraphRNA", "Recall@50", 31.42},
    {"Cora", "missing60", "ARWMF", "Recall@50", 29.6},
    {"Cora", "missing60", "SVGA", "Recall@50", 35.83},
    {"Cora", "missing60", "SAT", "Recall@50", 34.29},
    {"Cora", "missing60", "ITR", "Recall@50", 36.47},
    {"Cora", "missing60", "RITR", "Recall@50", 36.81},
    {"Cora", "missing60", "NeighAggre", "NDCG@10", 12.17},
    {"Cora", "missing60", "VAE", "NDCG@10", 12.24},
    {"Cora", "missing60", "GCN", "NDCG@10", 17.36},
    {"Cora", "missing60", "GraphSage", "NDCG@10", 17.68},
    {"Cora", "missing60", "GAT", "NDCG@10", 17.91},
    {"Cora", "missing60", "Hers", "NDCG@10", 16.94},
    {"Cora", "missing60", "GraphRNA", "NDCG@10", 19.34},
    {"Cora", "missing60", "ARWMF", "NDCG@10", 18.24},
    {"Cora", "missing60", "SVGA", "NDCG@10", 23.19},
    {"Cora", "missing60", "SAT", "NDCG@10", 21.12},
    {"Cora", "missing60", "ITR", "NDCG@10", 23.2},
    {"Cora", "missing60", "RITR", "NDCG@10", 24.2},
    {"Cora", "missing60", "NeighAggre", "NDCG@20", 15.48},
    {"Cora", "missing60", "VAE", "NDCG@20", 14.52},
    {"Cora", "missing60", "GCN", "NDCG@20", 20.76},
    {"Cora", "missing60", "GraphSage", "NDCG@20", 21.02},
    {"Cora", "missing60", "GAT", "NDCG@20", 20.99},
    {"Cora", "missing60", "Hers", "NDCG@20", 20.31},
    {"Cora", "missing60", "GraphRNA", "NDCG@20", 23.62},
    {"Cora", "missing60", "ARWMF", "NDCG@20", 21.82},
    {"Cora", "missing60", "SVGA", "NDCG@20", 26.81},
    {"Cora", "missing60", "SAT", "NDCG@20", 25.46},
    {"Cora", "missing60", "ITR", "NDCG@20", 27.81},
    {"Cora", "missing60", "RITR", "NDCG@20", 28.97},
    {"Cora", "missing60", "NeighAggre", "NDCG@50", 18.5},
    {"Cora", "missing60", "VAE", "NDCG@50", 19.24},
    {"Cora", "missing60", "GCN", "NDCG@50", 27.02},
    {"Cora", "missing60", "GraphSage", "NDCG@50", 27.28},
    {"Cora", "missing60", "GAT", "NDCG@50", 27.11},
    {"Cora", "missing60", "Hers", "NDCG@50", 25.96},
    {"Cora", "missing60", "GraphRNA", "NDCG@50", 29.38},
    {"Cora", "missing60", "ARWMF", "NDCG@50", 27.76},
    {"Cora", "missing60", "SVGA", "NDCG@50", 33.71},
    {"Cora", "missing60", "SAT", "NDCG@50", 32.12},
    {"Cora", "missing60", "ITR", "NDCG@50", 34.6},
    {"Cora", "missing60", "RITR", "NDCG@50", 35.52},
    {"Citeseer", "missing60", "NeighAggre", "Recall@10", 5.11},
    {"Citeseer", "missing60", "VAE", "Recall@10", 3.82},
    {"Citeseer", "missing60", "GCN", "Recall@10", 6.2},
    {"Citeseer", "missing60", "GraphSage", "Recall@10", 6.12},
    {"Citeseer", "missing60", "GAT", "Recall@10", 5.61},
    {"Citeseer", "missing60", "Hers", "Recall@10", 5.76},
    {"Citeseer", "missing60", "GraphRNA", "Recall@10", 7.77},
    {"Citeseer", "missing60", "ARWMF", "Recall@10", 5.52},
    {"Citeseer", "missing60", "SVGA", "Recall@10", 8.83},
    {"Citeseer", "missing60", "SAT", "Recall@10", 7.64},
    {"Citeseer", "missing60", "ITR", "Recall@10", 9.63},
    {"Citeseer", "missing60", "RITR", "Recall@10", 10.16},
    {"Citeseer", "missing60", "NeighAggre", "Recall@20", 9.08},
    {"Citeseer", "missing60", "VAE", "Recall@20", 6.68},
    {"Citeseer", "missing60", "GCN", "Recall@20", 10.97},
    {"Citeseer", "missing60", "GraphSage", "Recall@20", 10.97},
    {"Citeseer", "missing60", "GAT", "Recall@20", 10.12},
    {"Citeseer", "missing60", "Hers", "Recall@20", 10.25},
    {"Citeseer", "missing60", "GraphRNA", "Recall@20", 12.72},
    {"Citeseer", "missing60", "ARWMF", "Recall@20", 10.15},
    {"Citeseer", "missing60", "SVGA", "Recall@20", 14.55},
    {"Citeseer", "missing60", "SAT", "Recall@20", 12.8},
    {"Citeseer", "missing60", "ITR", "Recall@20", 15.48},
    {"Citeseer", "missing60", "RITR", "Recall@20", 15.97},
    {"Citeseer", "missing60", "NeighAggre", "Recall@50", 15.01},
    {"Citeseer", "missing60", "VAE", "Recall@50", 12.96},
    {"Citeseer", "missing60", "GCN", "Recall@50", 20.52},
    {"Citeseer", "missing60", "GraphSage", "Recall@50", 20.58},
    {"Citeseer", "missing60", "GAT", "Recall@50", 19.57},
    {"Citeseer", "missing60", "Hers", "Recall@50", 19.73},
    {"Citeseer", "missing60", "GraphRNA", "Recall@50", 22.71},
    {"Citeseer", "missing60", "ARWMF", "Recall@50", 19.52},
    {"Citeseer", "missing60", "SVGA", "Recall@50", 25.91},
    {"Citeseer", "missing60", "SAT", "Recall@50", 23.77},
    {"Citeseer", "missing60", "ITR", "Recall@50", 26.84},
    {"Citeseer", "missing60", "RITR", "Recall@50", 26.9},
    {"Citeseer", "missing60", "NeighAggre", "NDCG@10", 8.23},
    {"Citeseer", "missing60", "VAE", "NDCG@10", 6.01},
    {"Citeseer", "missing60", "GCN", "NDCG@10", 10.26},
    {"Citeseer", "missing60", "GraphSage", "NDCG@10", 10.03},
    {"Citeseer", "missing60", "GAT", "NDCG@10", 8.78},
    {"Citeseer", "missing60", "Hers", "NDCG@10", 9.04},
    {"Citeseer", "missing60", "GraphRNA", "NDCG@10", 12.91},
    {"Citeseer", "missing60", "ARWMF", "NDCG@10", 8.59},
    {"Citeseer", "missing60", "SVGA", "NDCG@10", 15.21},
    {"Citeseer", "missing60", "SAT", "NDCG@10", 12.98},
    {"Citeseer", "missing60", "ITR", "NDCG@10", 16.32},
    {"Citeseer", "missing60", "RITR", "NDCG@10", 17.16},
    {"Citeseer", "missing60", "NeighAggre", "NDCG@20", 11.55},
    {"Citeseer", "missing60", "VAE", "NDCG@20", 8.39},
    {"Citeseer", "missing60", "GCN", "NDCG@20", 14.23},
    {"Citeseer", "missing60", "GraphSage", "NDCG@20", 13.93},
    {"Citeseer", "missing60", "GAT", "NDCG@20", 12.53},
    {"Citeseer", "missing60", "Hers", "NDCG@20", 12.79},
    {"Citeseer", "missing60", "GraphRNA", "NDCG@20", 17.03},
    {"Citeseer", "missing60", "ARWMF", "NDCG@20", 12.45},
    {"Citeseer", "missing60", "SVGA", "NDCG@20", 20.08},
    {"Citeseer", "missing60", "SAT", "NDCG@20", 17.29},
    {"Citeseer", "missing60", "ITR", "NDCG@20", 21.2},
    {"Citeseer", "missing60", "RITR", "NDCG@20", 22.03},
    {"Citeseer", "missing60", "NeighAggre", "NDCG@50", 15.6},
    {"Citeseer", "missing60", "VAE", "NDCG@50", 12.51},
    {"Citeseer", "missing60", "GCN", "NDCG@50", 20.49},
    {"Citeseer", "missing60", "GraphSage", "NDCG@50", 20.34},
    {"Citeseer", "missing60", "GAT", "NDCG@50", 18.72},
    {"Citeseer", "missing60", "Hers", "NDCG@50", 19.0},
    {"Citeseer", "missing60", "GraphRNA", "NDCG@50", 23.58},
    {"Citeseer", "missing60", "ARWMF", "NDCG@50", 18.58},
    {"Citeseer", "missing60", "SVGA", "NDCG@50", 27.99},
    {"Citeseer", "missing60", "SAT", "NDCG@50", 24.47},
    {"Citeseer", "missing60", "ITR", "NDCG@50", 28.69},
    {"Citeseer", "missing60", "RITR", "NDCG@50", 29.22},
    {"Amac", "missing60", "NeighAggre", "Recall@10", 3.21},
    {"Amac", "missing60", "VAE", "Recall@10", 2.55},
    {"Amac", "missing60", "GCN", "Recall@10", 2.73},
    {"Amac", "missing60", "GraphSage", "Recall@10", 2.69},
    {"Amac", "missing60", "GAT", "Recall@10", 2.71},
    {"Amac", "missing60", "Hers", "Recall@10", 2.73},
    {"Amac", "missing60", "GraphRNA", "Recall@10", 3.86},
    {"Amac", "missing60", "ARWMF", "Recall@10", 2.8},
    {"Amac", "missing60", "SVGA", "Recall@10", 3.97},
    {"Amac", "missing60", "SAT", "Recall@10", 3.91},
    {"Amac", "missing60", "ITR", "Recall@10", 4.48},
    {"Amac", "missing60", "RITR", "Recall@10", 4.59},
    {"Amac", "missing60", "NeighAggre", "Recall@20", 5.93},
    {"Amac", "missing60", "VAE", "Recall@20", 5.02},
    {"Amac", "missing60", "GCN", "Recall@20", 5.33},
    {"Amac", "missing60", "GraphSage", "Recall@20", 5.28},
    {"Amac", "missing60", "GAT", "Recall@20", 5.3},
    {"Amac", "missing60", "Hers", "Recall@20", 5.25},
    {"Amac", "missing60", "GraphRNA", "Recall@20", 6.9},
    {"Amac", "missing60", "ARWMF", "Recall@20", 5.44},
    {"Amac", "missing60", "SVGA", "Recall@20", 7.22},
    {"Amac", "missing60", "SAT", "Recall@20", 7.03},
    {"Amac", "missing60", "ITR", "Recall@20", 7.81},
    {"Amac", "missing60", "RITR", "Recall@20", 8.06},
    {"Amac", "missing60", "NeighAggre", "Recall@50", 13.06},
    {"Amac", "missing60", "VAE", "Recall@50", 11.96},
    {"Amac", "missing60", "GCN", "Recall@50", 12.75},
    {"Amac", "missing60", "GraphSage", "Recall@50", 12.78},
    {"Amac", "missing60", "GAT", "Recall@50", 12.78},
    {"Amac", "missing60", "Hers", "Recall@50", 12.73},
    {"Amac", "missing60", "GraphRNA", "Recall@50", 14.65},
    {"Amac", "missing60", "ARWMF", "Recall@50", 12.89},
    {"Amac", "missing60", "SVGA", "Recall@50", 15.75},
    {"Amac", "missing60", "SAT", "Recall@50", 15.14},
    {"Amac", "missing60", "ITR", "Recall@50", 16.2},
    {"Amac", "missing60", "RITR", "Recall@50", 16.48},
    {"Amac", "missing60", "NeighAggre", "NDCG@10", 7.88},
    {"Amac", "missing60", "VAE", "NDCG@10", 6.32},
    {"Amac", "missing60", "GCN", "NDCG@10", 6.71},
    {"Amac", "missing60", "GraphSage", "NDCG@10", 6.64},
    {"Amac", "missing60", "GAT", "NDCG@10", 6.73},
    {"Amac", "missing60", "Hers", "NDCG@10", 6.76},
    {"Amac", "missing60", "GraphRNA", "NDCG@10", 9.31},
    {"Amac", "missing60", "ARWMF", "NDCG@10", 6.94},
    {"Amac", "missing60", "SVGA", "NDCG@10", 10.11},
    {"Amac", "missing60", "SAT", "NDCG@10", 9.63},
    {"Amac", "missing60", "ITR", "NDCG@10", 10.95},
    {"Amac", "missing60", "RITR", "NDCG@10", 11.14},
    {"Amac", "missing60", "NeighAggre", "NDCG@20", 11.56},
    {"Amac", "missing60", "VAE", "NDCG@20", 9.7},
    {"Amac", "missing60", "GCN", "NDCG@20", 10.27},
    {"Amac", "missing60", "GraphSage", "NDCG@20", 10.2},
    {"Amac", "missing60", "GAT", "NDCG@20", 10.28},
    {"Amac", "missing60", "Hers", "NDCG@20", 10.25},
    {"Amac", "missing60", "GraphRNA", "NDCG@20", 13.33},
    {"Amac", "missing60", "ARWMF", "NDCG@20", 10.53},
    {"Amac", "missing60", "SVGA", "NDCG@20", 14.98},
    {"Amac", "missing60", "SAT", "NDCG@20", 13.79},
    {"Amac", "missing60", "ITR", "NDCG@20", 15.37},
    {"Amac", "missing60", "RITR", "NDCG@20", 15.69},
    {"Amac", "missing60", "NeighAggre", "NDCG@50", 19.23},
    {"Amac", "missing60", "VAE", "NDCG@50", 17.21},
    {"Amac", "missing60", "GCN", "NDCG@50", 18.24},
    {"Amac", "missing60", "GraphSage", "NDCG@50", 18.22},
    {"Amac", "missing60", "GAT", "NDCG@50", 18.3},
    {"Amac", "missing60", "Hers", "NDCG@50", 18.25},
    {"Amac", "missing60", "GraphRNA", "NDCG@50", 21.55},
    {"Amac", "missing60", "ARWMF", "NDCG@50", 18.51},
    {"Amac", "missing60", "SVGA", "NDCG@50", 23.84},
    {"Amac", "missing60", "SAT", "NDCG@50", 22.43},
    {"Amac", "missing60", "ITR", "NDCG@50", 24.29},
    {"Amac", "missing60", "RITR", "NDCG@50", 24.63},
    {"Amap", "missing60", "NeighAggre", "Recall@10", 3.29},
    {"Amap", "missing60", "VAE", "Recall@10", 2.76},
    {"Amap", "missing60", "GCN", "Recall@10", 2.94},
    {"Amap", "missing60", "GraphSage", "Recall@10", 2.95},
    {"Amap", "missing60", "GAT", "Recall@10", 2.94},
    {"Amap", "missing60", "Hers", "Recall@10", 2.92},
    {"Amap", "missing60", "GraphRNA", "Recall@10", 3.9},
    {"Amap", "missing60", "ARWMF", "Recall@10", 2.94},
    {"Amap", "missing60", "SVGA", "Recall@10", 4.14},
    {"Amap", "missing60", "SAT", "Recall@10", 4.1},
    {"Amap", "missing60", "ITR", "Recall@10", 4.36},
    {"Amap", "missing60", "RITR", "Recall@10", 4.49},
    {"Amap", "missing60", "NeighAggre", "Recall@20", 6.16},
    {"Amap", "missing60", "VAE", "Recall@20", 5.38},
    {"Amap", "missing60", "GCN", "Recall@20", 5.73},
    {"Amap", "missing60", "GraphSage", "Recall@20", 5.62},
    {"Amap", "missing60", "GAT", "Recall@20", 5.73},
    {"Amap", "missing60", "Hers", "Recall@20", 5.74},
    {"Amap", "missing60", "GraphRNA", "Recall@20", 7.03},
    {"Amap", "missing60", "ARWMF", "Recall@20", 5.68},
    {"Amap", "missing60", "SVGA", "Recall@20", 7.51},
    {"Amap", "missing60", "SAT", "Recall@20", 7.43},
    {"Amap", "missing60", "ITR", "Recall@20", 7.82},
    {"Amap", "missing60", "RITR", "Recall@20", 8.0},
    {"Amap", "missing60", "NeighAggre", "Recall@50", 13.61},
    {"Amap", "missing60", "VAE", "Recall@50", 12.79},
    {"Amap", "missing60", "GCN", "Recall@50", 13.24},
    {"Amap", "missing60", "GraphSage", "Recall@50", 13.22},
    {"Amap", "missing60", "GAT", "Recall@50", 13.24},
    {"Amap", "missing60", "Hers", "Recall@50", 13.28},
    {"Amap", "missing60", "GraphRNA", "Recall@50", 15.08},
    {"Amap", "missing60", "ARWMF", "Recall@50", 13.27},
    {"Amap", "missing60", "SVGA", "Recall@50", 15.93},
    {"Amap", "missing60", "SAT", "Recall@50", 15.97},
    {"Amap", "missing60", "ITR", "Recall@50", 16.43},
    {"Amap", "missing60", "RITR", "Recall@50", 16.61},
    {"Amap", "missing60", "NeighAggre", "NDCG@10", 8.13},
    {"Amap", "missing60", "VAE", "NDCG@10", 6.75},
    {"Amap", "missing60", "GCN", "NDCG@10", 7.05},
    {"Amap", "missing60", "GraphSage", "NDCG@10", 7.12},
    {"Amap", "missing60", "GAT", "NDCG@10", 7.05},
    {"Amap", "missing60", "Hers", "NDCG@10", 7.14},
    {"Amap", "missing60", "GraphRNA", "NDCG@10", 9.59},
    {"Amap", "missing60", "ARWMF", "NDCG@10", 7.27},
    {"Amap", "missing60", "SVGA", "NDCG@10", 10.21},
    {"Amap", "missing60", "SAT", "NDCG@10", 10.06},
    {"Amap", "missing60", "ITR", "NDCG@10", 10.73},
    {"Amap", "missing60", "RITR", "NDCG@10", 10.94},
    {"Amap", "missing60", "NeighAggre", "NDCG@20", 11.96},
    {"Amap", "missing60", "VAE", "NDCG@20", 10.31},
    {"Amap", "missing60", "GCN", "NDCG@20", 10.82},
    {"Amap", "missing60", "GraphSage", "NDCG@20", 10.79},
    {"Amap", "missing60", "GAT", "NDCG@20", 10.83},
    {"Amap", "missing60", "Hers", "NDCG@20", 10.94},
    {"Amap", "missing60", "GraphRNA", "NDCG@20", 13.77},
    {"Amap", "missing60", "ARWMF", "NDCG@20", 10.98},
    {"Amap", "missing60", "SVGA", "NDCG@20", 14.73},
    {"Amap", "missing60", "SAT", "NDCG@20", 14.5},
    {"Amap", "missing60", "ITR", "NDCG@20", 15.33},
    {"Amap", "missing60", "RITR", "NDCG@20", 15.56},
    {"Amap", "missing60", "NeighAggre", "NDCG@50", 19.98},
    {"Amap", "missing60", "VAE", "NDCG@50", 18.3},
    {"Amap", "missing60", "GCN", "NDCG@50", 18.93},
    {"Amap", "missing60", "GraphSage", "NDCG@50", 18.96},
    {"Amap", "missing60", "GAT", "NDCG@50", 18.92},
    {"Amap", "missing60", "Hers", "NDCG@50", 19.06},
    {"Amap", "missing60", "GraphRNA", "NDCG@50", 22.32},
    {"Amap", "missing60", "ARWMF", "NDCG@50", 19.15},
    {"Amap", "missing60", "SVGA", "NDCG@50", 23.75},
    {"Amap", "missing60", "SAT", "NDCG@50", 23.59},
    {"Amap", "missing60", "ITR", "NDCG@50", 24.5},
    {"Amap", "missing60", "RITR", "NDCG@50", 24.72},
    {"Cora", "hybrid60", "Ours-Z", "Recall@50", 27.85},
    {"Cora", "hybrid60", "Ours-Z", "NDCG@50", 25.68},
    {"Cora", "hybrid60", "Ours-S", "Recall@50", 28.59},
    {"Cora", "hybrid60", "Ours-S", "NDCG@50", 26.45},
    {"Cora", "hybrid60", "Ours-S-A", "Recall@50", 32.43},
    {"Cora", "hybrid60", "Ours-S-A", "NDCG@50", 30.88},
    {"Citeseer", "hybrid60", "Ours-Z", "Recall@50", 18.56},
    {"Citeseer", "hybrid60", "Ours-Z", "NDCG@50", 18.56},
    {"Citeseer", "hybrid60", "Ours-S", "Recall@50", 19.79},
    {"Citeseer", "hybrid60", "Ours-S", "NDCG@50", 19.38},
    {"Citeseer", "hybrid60", "Ours-S-A", "Recall@50", 22.14},
    {"Citeseer", "hybrid60", "Ours-S-A", "NDCG@50", 23.67},
    {"Cora", "hybrid60", "RITR-noSTC", "Recall@10", 13.63},
    {"Cora", "hybrid60", "RITR-noSTC", "Recall@20", 19.67},
    {"Cora", "hybrid60", "RITR-noSTC", "Recall@50", 30.91},
    {"Cora", "hybrid60", "RITR-noSTC", "NDCG@10", 19.45},
    {"Cora", "hybrid60", "RITR-noSTC", "NDCG@20", 23.47},
    {"Cora", "hybrid60", "RITR-noSTC", "NDCG@50", 29.43},
    {"Cora", "hybrid60", "RITR-noITR", "Recall@10", 12.03},
    {"Cora", "hybrid60", "RITR-noITR", "Recall@20", 16.52},
    {"Cora", "hybrid60", "RITR-noITR", "Recall@50", 27.7},
    {"Cora", "hybrid60", "RITR-noITR", "NDCG@10", 16.79},
    {"Cora", "hybrid60", "RITR-noITR", "NDCG@20", 19.84},
    {"Cora", "hybrid60", "RITR-noITR", "NDCG@50", 25.66},
    {"Cora", "hybrid60", "RITR", "Recall@10", 14.36},
    {"Cora", "hybrid60", "RITR", "Recall@20", 20.69},
    {"Cora", "hybrid60", "RITR", "Recall@50", 32.43},
    {"Cora", "hybrid60", "RITR", "NDCG@10", 20.51},
    {"Cora", "hybrid60", "RITR", "NDCG@20", 24.69},
    {"Cora", "hybrid60", "RITR", "NDCG@50", 30.88},
    {"Citeseer", "hybrid60", "RITR-noSTC", "Recall@10", 7.08},
    {"Citeseer", "hybrid60", "RITR-noSTC", "Recall@20", 11.93},
    {"Citeseer", "hybrid60", "RITR-noSTC", "Recall@50", 21.61},
    {"Citeseer", "hybrid60", "RITR-noSTC", "NDCG@10", 12.12},
    {"Citeseer", "hybrid60", "RITR-noSTC", "NDCG@20", 16.37},
    {"Citeseer", "hybrid60", "RITR-noSTC", "NDCG@50", 22.8},
    {"Citeseer", "hybrid60", "RITR-noITR", "Recall@10", 5.19},
    {"Citeseer", "hybrid60", "RITR-noITR", "Recall@20", 9.3},
    {"Citeseer", "hybrid60", "RITR-noITR", "Recall@50", 18.17},
    {"Citeseer", "hybrid60", "RITR-noITR", "NDCG@10", 8.03},
    {"Citeseer", "hybrid60", "RITR-noITR", "NDCG@20", 11.46},
    {"Citeseer", "hybrid60", "RITR-noITR", "NDCG@50", 17.25},
    {"Citeseer", "hybrid60", "RITR", "Recall@10", 7.78},
    {"Citeseer", "hybrid60", "RITR", "Recall@20", 12.51},
    {"Citeseer", "hybrid60", "RITR", "Recall@50", 22.14},
    {"Citeseer", "hybrid60", "RITR", "NDCG@10", 13.38},
    {"Citeseer", "hybrid60", "RITR", "NDCG@20", 17.33},
    {"Citeseer", "hybrid60", "RITR", "NDCG@50", 23.67},
    {"Amac", "hybrid60", "RITR-noSTC", "Recall@10", 3.92},
    {"Amac", "hybrid60", "RITR-noSTC", "Recall@20", 6.97},
    {"Amac", "hybrid60", "RITR-noSTC", "Recall@50", 15.1},
    {"Amac", "hybrid60", "RITR-noSTC", "NDCG@10", 9.84},
    {"Amac", "hybrid60", "RITR-noSTC", "NDCG@20", 14.05},
    {"Amac", "hybrid60", "RITR-noSTC", "NDCG@50", 22.72},
    {"Amac", "hybrid60", "RITR-noITR", "Recall@10", 2.83},
    {"Amac", "hybrid60", "RITR-noITR", "Recall@20", 5.49},
    {"Amac", "hybrid60", "RITR-noITR", "Recall@50", 12.92},
    {"Amac", "hybrid60", "RITR-noITR", "NDCG@10", 7.01},
    {"Amac", "hybrid60", "RITR-noITR", "NDCG@20", 10.63},
    {"Amac", "hybrid60", "RITR-noITR", "NDCG@50", 18.6},
    {"Amac", "hybrid60", "RITR", "Recall@10", 4.26},
    {"Amac", "hybrid60", "RITR", "Recall@20", 7.47},
    {"Amac", "hybrid60", "RITR", "Recall@50", 15.72},
    {"Amac", "hybrid60", "RITR", "NDCG@10", 10.44},
    {"Amac", "hybrid60", "RITR", "NDCG@20", 14.73},
    {"Amac", "hybrid60", "RITR", "NDCG@50", 23.5},
    {"Amap", "hybrid60", "RITR-noSTC", "Recall@10", 3.96},
    {"Amap", "hybrid60", "RITR-noSTC", "Recall@20", 7.16},
    {"Amap", "hybrid60", "RITR-noSTC", "Recall@50", 15.58},
    {"Amap", "hybrid60", "RITR-noSTC", "NDCG@10", 10.04},
    {"Amap", "hybrid60", "RITR-noSTC", "NDCG@20", 14.35},
    {"Amap", "hybrid60", "RITR-noSTC", "NDCG@50", 23.33},
    {"Amap", "hybrid60", "RITR-noITR", "Recall@10", 3.04},
    {"Amap", "hybrid60", "RITR-noITR", "Recall@20", 5.79},
    {"Amap", "hybrid60", "RITR-noITR", "Recall@50", 13.46},
    {"Amap", "hybrid60", "RITR-noITR", "NDCG@10", 7.53},
    {"Amap", "hybrid60", "RITR-noITR", "NDCG@20", 11.25},
    {"Amap", "hybrid60", "RITR-noITR", "NDCG@50", 19.47},
    {"Amap", "hybrid60", "RITR", "Recall@10", 4.25},
    {"Amap", "hybrid60", "RITR", "Recall@20", 7.5},
    {"Amap", "hybrid60", "RITR", "Recall@50", 16.0},
    {"Amap", "hybrid60", "RITR", "NDCG@10", 10.42},
    {"Amap", "hybrid60", "RITR", "NDCG@20", 14.78},
    {"Amap", "hybrid60", "RITR", "NDCG@50", 23.84},
    {"Cora", "hybrid60_air10", "SAT", "Recall@10", 14.74},
    {"Cora", "hybrid60_air10", "RITR", "Recall@10", 17.12},
    {"Cora", "hybrid60_air20", "SAT", "Recall@10", 14.84},
    {"Cora", "hybrid60_air20", "RITR", "Recall@10", 16.59},
    {"Cora", "hybrid60_air30", "SAT", "Recall@10", 14.23},
    {"Cora", "hybrid60_air30", "RITR", "Recall@10", 16.08},
    {"Cora", "hybrid60_air40", "SAT", "Recall@10", 13.84},
    {"Cora", "hybrid60_air40", "RITR", "Recall@10", 15.86},
    {"Cora", "hybrid60_air50", "SAT", "Recall@10", 13.59},
    {"Cora", "hybrid60_air50", "RITR", "Recall@10", 14.95},
    {"Cora", "hybrid60_air60", "SAT", "Recall@10", 12.62},
    {"Cora", "hybrid60_air60", "RITR", "Recall@10", 14.36},
    {"Cora", "hybrid60_air70", "SAT", "Recall@10", 12.34},
    {"Cora", "hybrid60_air70", "RITR", "Recall@10", 13.16},
    {"Cora", "hybrid60_air10", "SAT", "Recall@20", 21.45},
    {"Cora", "hybrid60_air10", "RITR", "Recall@20", 23.72},
    {"Cora", "hybrid60_air20", "SAT", "Recall@20", 21.46},
    {"Cora", "hybrid60_air20", "RITR", "Recall@20", 23.36},
    {"Cora", "hybrid60_air30", "SAT", "Recall@20", 20.7},
    {"Cora", "hybrid60_air30", "RITR", "Recall@20", 23.02},
    {"Cora", "hybrid60_air40", "SAT", "Recall@20", 20.17},
    {"Cora", "hybrid60_air40", "RITR", "Recall@20", 22.29},
    {"Cora", "hybrid60_air50", "SAT", "Recall@20", 19.57},
    {"Cora", "hybrid60_air50", "RITR", "Recall@20", 21.4},
    {"Cora", "hybrid60_air60", "SAT", "Recall@20", 18.46},
    {"Cora", "hybrid60_air60", "RITR", "Recall@20", 20.69},
    {"Cora", "hybrid60_air70", "SAT", "Recall@20", 16.78},
    {"Cora", "hybrid60_air70", "RITR", "Recall@20", 18.72},
    {"Cora", "hybrid60_air10", "SAT", "Recall@50", 34.08},
    {"Cora", "hybrid60_air10", "RITR", "Recall@50", 36.32},
    {"Cora", "hybrid60_air20", "SAT", "Recall@50", 34.0},
    {"Cora", "hybrid60_air20", "RITR", "Recall@50", 35.76},
    {"Cora", "hybrid60_air30", "SAT", "Recall@50", 33.06},
    {"Cora", "hybrid60_air30", "RITR", "Recall@50", 35.19},
    {"Cora", "hybrid60_air40", "SAT", "Recall@50", 32.34},
    {"Cora", "hybrid60_air40", "RITR", "Recall@50", 34.38},
    {"Cora", "hybrid60_air50", "SAT", "Recall@50", 31.48},
    {"Cora", "hybrid60_air50", "RITR", "Recall@50", 33.38},
    {"Cora", "hybrid60_air60", "SAT", "Recall@50", 29.97},
    {"Cora", "hybrid60_air60", "RITR", "Recall@50", 32.43},
    {"Cora", "hybrid60_air70", "SAT", "Recall@50", 27.75},
    {"Cora", "hybrid60_air70", "RITR", "Recall@50", 30.21},
    {"Cora", "hybrid60_air10", "SAT", "NDCG@10", 20.7},
    {"Cora", "hybrid60_air10", "RITR", "NDCG@10", 23.94},
    {"Cora", "hybrid60_air20", "SAT", "NDCG@10", 20.73},
    {"Cora", "hybrid60_air20", "RITR", "NDCG@10", 23.35},
    {"Cora", "hybrid60_air30", "SAT", "NDCG@10", 20.12},
    {"Cora", "hybrid60_air30", "RITR", "NDCG@10", 22.66},
    {"Cora", "hybrid60_air40", "SAT", "NDCG@10", 19.5},
    {"Cora", "hybrid60_air40", "RITR", "NDCG@10", 22.37},
    {"Cora", "hybrid60_air50", "SAT", "NDCG@10", 19.12},
    {"Cora", "hybrid60_air50", "RITR", "NDCG@10", 21.37},
    {"Cora", "hybrid60_air60", "SAT", "NDCG@10", 18.01},
    {"Cora", "hybrid60_air60", "RITR", "NDCG@10", 20.51},
    {"Cora", "hybrid60_air70", "SAT", "NDCG@10", 16.83},
    {"Cora", "hybrid60_air70", "RITR", "NDCG@10", 19.08},
    {"Cora", "hybrid60_air10", "SAT", "NDCG@20", 25.11},
    {"Cora", "hybrid60_air10", "RITR", "NDCG@20", 28.4},
    {"Cora", "hybrid60_air20", "SAT", "NDCG@20", 25.09},
    {"Cora", "hybrid60_air20", "RITR", "NDCG@20", 27.86},
    {"Cora", "hybrid60_air30", "SAT", "NDCG@20", 24.41},
    {"Cora", "hybrid60_air30", "RITR", "NDCG@20", 27.26},
    {"Cora", "hybrid60_air40", "SAT", "NDCG@20", 23.74},
    {"Cora", "hybrid60_air40", "RITR", "NDCG@20", 26.67},
    {"Cora", "hybrid60_air50", "SAT", "NDCG@20", 23.11},
    {"Cora", "hybrid60_air50", "RITR", "NDCG@20", 25.69},
    {"Cora", "hybrid60_air60", "SAT", "NDCG@20", 21.91},
    {"Cora", "hybrid60_air60", "RITR", "NDCG@20", 24.69},
    {"Cora", "hybrid60_air70", "SAT", "NDCG@20", 19.83},
    {"Cora", "hybrid60_air70", "RITR", "NDCG@20", 22.8},
    {"Cora", "hybrid60_air10", "SAT", "NDCG@50", 31.8},
    {"Cora", "hybrid60_air10", "RITR", "NDCG@50", 35.1},
    {"Cora", "hybrid60_air20", "SAT", "NDCG@50", 31.78},
    {"Cora", "hybrid60_air20", "RITR", "NDCG@50", 34.44},
    {"Cora", "hybrid60_air30", "SAT", "NDCG@50", 30.9},
    {"Cora", "hybrid60_air30", "RITR", "NDCG@50", 33.73},
    {"Cora", "hybrid60_air40", "SAT", "NDCG@50", 30.15},
    {"Cora", "hybrid60_air40", "RITR", "NDCG@50", 33.06},
    {"Cora", "hybrid60_air50", "SAT", "NDCG@50", 29.4},
    {"Cora", "hybrid60_air50", "RITR", "NDCG@50", 32.04},
    {"Cora", "hybrid60_air60", "SAT", "NDCG@50", 27.94},
    {"Cora", "hybrid60_air60", "RITR", "NDCG@50", 30.88},
    {"Cora", "hybrid60_air70", "SAT", "NDCG@50", 25.62},
    {"Cora", "hybrid60_air70", "RITR", "NDCG@50", 28.83},
    {"Citeseer", "hybrid60_air10", "SAT", "Recall@10", 7.27},
    {"Citeseer", "hybrid60_air10", "RITR", "Recall@10", 9.69},
    {"Citeseer", "hybrid60_air20", "SAT", "Recall@10", 7.23},
    {"Citeseer", "hybrid60_air20", "RITR", "Recall@10", 9.48},
    {"Citeseer", "hybrid60_air30", "SAT", "Recall@10", 7.24},
    {"Citeseer", "hybrid60_air30", "RITR", "Recall@10", 9.09},
    {"Citeseer", "hybrid60_air40", "SAT", "Recall@10", 6.95},
    {"Citeseer", "hybrid60_air40", "RITR", "Recall@10", 8.79},
    {"Citeseer", "hybrid60_air50", "SAT", "Recall@10", 6.61},
    {"Citeseer", "hybrid60_air50", "RITR", "Recall@10", 8.44},
    {"Citeseer", "hybrid60_air60", "SAT", "Recall@10", 5.84},
    {"Citeseer", "hybrid60_air60", "RITR", "Recall@10", 7.78},
    {"Citeseer", "hybrid60_air70", "SAT", "Recall@10", 5.68},
    {"Citeseer", "hybrid60_air70", "RITR", "Recall@10", 7.19},
    {"Citeseer", "hybrid60_air10", "SAT", "Recall@20", 12.33},
    {"Citeseer", "hybrid60_air10", "RITR", "Recall@20", 15.5},
    {"Citeseer", "hybrid60_air20", "SAT", "Recall@20", 11.95},
    {"Citeseer", "hybrid60_air20", "RITR", "Recall@20", 15.12},
    {"Citeseer", "hybrid60_air30", "SAT", "Recall@20", 11.94},
    {"Citeseer", "hybrid60_air30", "RITR", "Recall@20", 14.59},
    {"Citeseer", "hybrid60_air40", "SAT", "Recall@20", 11.52},
    {"Citeseer", "hybrid60_air40", "RITR", "Recall@20", 14.0},
    {"Citeseer", "hybrid60_air50", "SAT", "Recall@20", 11.03},
    {"Citeseer", "hybrid60_air50", "RITR", "Recall@20", 13.44},
    {"Citeseer", "hybrid60_air60", "SAT", "Recall@20", 9.95},
    {"Citeseer", "hybrid60_air60", "RITR", "Recall@20", 12.51},
    {"Citeseer", "hybrid60_air70", "SAT", "Recall@20", 9.97},
    {"Citeseer", "hybrid60_air70", "RITR", "Recall@20", 11.54},
    {"Citeseer", "hybrid60_air10", "SAT", "Recall@50", 22.9},
    {"Citeseer", "hybrid60_air10", "RITR", "Recall@50", 26.36},
    {"Citeseer", "hybrid60_air20", "SAT", "Recall@50", 22.28},
    {"Citeseer", "hybrid60_air20", "RITR", "Recall@50", 25.87},
    {"Citeseer", "hybrid60_air30", "SAT", "Recall@50", 22.55},
    {"Citeseer", "hybrid60_air30", "RITR", "Recall@50", 25.16},
    {"Citeseer", "hybrid60_air40", "SAT", "Recall@50", 21.75},
    {"Citeseer", "hybrid60_air40", "RITR", "Recall@50", 24.23},
    {"Citeseer", "hybrid60_air50", "SAT", "Recall@50", 20.88},
    {"Citeseer", "hybrid60_air50", "RITR", "Recall@50", 23.46},
    {"Citeseer", "hybrid60_air60", "SAT", "Recall@50", 19.2},
    {"Citeseer", "hybrid60_air60", "RITR", "Recall@50", 22.14},
    {"Citeseer", "hybrid60_air70", "SAT", "Recall@50", 18.99},
    {"Citeseer", "hybrid60_air70", "RITR", "Recall@50", 20.58},
    {"Citeseer", "hybrid60_air10", "SAT", "NDCG@10", 12.61},
    {"Citeseer", "hybrid60_air10", "RITR", "NDCG@10", 16.5},
    {"Citeseer", "hybrid60_air20", "SAT", "NDCG@10", 12.4},
    {"Citeseer", "hybrid60_air20", "RITR", "NDCG@10", 16.16},
    {"Citeseer", "hybrid60_air30", "SAT", "NDCG@10", 12.25},
    {"Citeseer", "hybrid60_air30", "RITR", "NDCG@10", 15.59},
    {"Citeseer", "hybrid60_air40", "SAT", "NDCG@10", 11.85},
    {"Citeseer", "hybrid60_air40", "RITR", "NDCG@10", 15.11},
    {"Citeseer", "hybrid60_air50", "SAT", "NDCG@10", 11.29},
    {"Citeseer", "hybrid60_air50", "RITR", "NDCG@10", 14.47},
    {"Citeseer", "hybrid60_air60", "SAT", "NDCG@10", 9.71},
    {"Citeseer", "hybrid60_air60", "RITR", "NDCG@10", 13.38},
    {"Citeseer", "hybrid60_air70", "SAT", "NDCG@10", 8.63},
    {"Citeseer", "hybrid60_air70", "RITR", "NDCG@10", 12.51},
    {"Citeseer", "hybrid60_air10", "SAT", "NDCG@20", 16.83},
    {"Citeseer", "hybrid60_air10", "RITR", "NDCG@20", 21.37},
    {"Citeseer", "hybrid60_air20", "SAT", "NDCG@20", 16.34},
    {"Citeseer", "hybrid60_air20", "RITR", "NDCG@20", 20.88},
    {"Citeseer", "hybrid60_air30", "SAT", "NDCG@20", 16.17},
    {"Citeseer", "hybrid60_air30", "RITR", "NDCG@20", 20.18},
    {"Citeseer", "hybrid60_air40", "SAT", "NDCG@20", 15.65},
    {"Citeseer", "hybrid60_air40", "RITR", "NDCG@20", 19.46},
    {"Citeseer", "hybrid60_air50", "SAT", "NDCG@20", 14.98},
    {"Citeseer", "hybrid60_air50", "RITR", "NDCG@20", 18.64},
    {"Citeseer", "hybrid60_air60", "SAT", "NDCG@20", 13.13},
    {"Citeseer", "hybrid60_air60", "RITR", "NDCG@20", 17.33},
    {"Citeseer", "hybrid60_air70", "SAT", "NDCG@20", 12.21},
    {"Citeseer", "hybrid60_air70", "RITR", "NDCG@20", 16.14},
    {"Citeseer", "hybrid60_air10", "SAT", "NDCG@50", 23.74},
    {"Citeseer", "hybrid60_air10", "RITR", "NDCG@50", 28.5},
    {"Citeseer", "hybrid60_air20", "SAT", "NDCG@50", 23.09},
    {"Citeseer", "hybrid60_air20", "RITR", "NDCG@50", 27.94},
    {"Citeseer", "hybrid60_air30", "SAT", "NDCG@50", 23.11},
    {"Citeseer", "hybrid60_air30", "RITR", "NDCG@50", 27.13},
    {"Citeseer", "hybrid60_air40", "SAT", "NDCG@50", 22.35},
    {"Citeseer", "hybrid60_air40", "RITR", "NDCG@50", 26.18},
    {"Citeseer", "hybrid60_air50", "SAT", "NDCG@50", 21.41},
    {"Citeseer", "hybrid60_air50", "RITR", "NDCG@50", 25.21},
    {"Citeseer", "hybrid60_air60", "SAT", "NDCG@50", 19.19},
    {"Citeseer", "hybrid60_air60", "RITR", "NDCG@50", 23.67},
    {"Citeseer", "hybrid60_air70", "SAT", "NDCG@50", 18.1},
    {"Citeseer", "hybrid60_air70", "RITR", "NDCG@50", 22.06},
    {"Amac", "hybrid60_air10", "SAT", "Recall@10", 3.81},
    {"Amac", "hybrid60_air10", "RITR", "Recall@10", 4.5},
    {"Amac", "hybrid60_air20", "SAT", "Recall@10", 3.81},
    {"Amac", "hybrid60_air20", "RITR", "Recall@10", 4.47},
    {"Amac", "hybrid60_air30", "SAT", "Recall@10", 3.78},
    {"Amac", "hybrid60_air30", "RITR", "Recall@10", 4.44},
    {"Amac", "hybrid60_air40", "SAT", "Recall@10", 3.75},
    {"Amac", "hybrid60_air40", "RITR", "Recall@10", 4.39},
    {"Amac", "hybrid60_air50", "SAT", "Recall@10", 3.7},
    {"Amac", "hybrid60_air50", "RITR", "Recall@10", 4.36},
    {"Amac", "hybrid60_air60", "SAT", "Recall@10", 3.59},
    {"Amac", "hybrid60_air60", "RITR", "Recall@10", 4.26},
    {"Amac", "hybrid60_air70", "SAT", "Recall@10", 3.24},
    {"Amac", "hybrid60_air70", "RITR", "Recall@10", 4.14},
    {"Amac", "hybrid60_air10", "SAT", "Recall@20", 6.88},
    {"Amac", "hybrid60_air10", "RITR", "Recall@20", 7.88},
    {"Amac", "hybrid60_air20", "SAT", "Recall@20", 6.82},
    {"Amac", "hybrid60_air20", "RITR", "Recall@20", 7.83},
    {"Amac", "hybrid60_air30", "SAT", "Recall@20", 6.79},
    {"Amac", "hybrid60_air30", "RITR", "Recall@20", 7.76},
    {"Amac", "hybrid60_air40", "SAT", "Recall@20", 6.7},
    {"Amac", "hybrid60_air40", "RITR", "Recall@20", 7.69},
    {"Amac", "hybrid60_air50", "SAT", "Recall@20", 6.69},
    {"Amac", "hybrid60_air50", "RITR", "Recall@20", 7.6},
    {"Amac", "hybrid60_air60", "SAT", "Recall@20", 6.52},
    {"Amac", "hybrid60_air60", "RITR", "Recall@20", 7.47},
    {"Amac", "hybrid60_air70", "SAT", "Recall@20", 6.13},
    {"Amac", "hybrid60_air70", "RITR", "Recall@20", 7.39},
    {"Amac", "hybrid60_air10", "SAT", "Recall@50", 14.86},
    {"Amac", "hybrid60_air10", "RITR", "Recall@50", 16.24},
    {"Amac", "hybrid60_air20", "SAT", "Recall@50", 14.79},
    {"Amac", "hybrid60_air20", "RITR", "Recall@50", 16.21},
    {"Amac", "hybrid60_air30", "SAT", "Recall@50", 14.73},
    {"Amac", "hybrid60_air30", "RITR", "Recall@50", 16.1},
    {"Amac", "hybrid60_air40", "SAT", "Recall@50", 14.64},
    {"Amac", "hybrid60_air40", "RITR", "Recall@50", 16.02},
    {"Amac", "hybrid60_air50", "SAT", "Recall@50", 14.52},
    {"Amac", "hybrid60_air50", "RITR", "Recall@50", 15.91},
    {"Amac", "hybrid60_air60", "SAT", "Recall@50", 14.28},
    {"Amac", "hybrid60_air60", "RITR", "Recall@50", 15.72},
    {"Amac", "hybrid60_air70", "SAT", "Recall@50", 13.99},
    {"Amac", "hybrid60_air70", "RITR", "Recall@50", 15.83},
    {"Amac", "hybrid60_air10", "SAT", "NDCG@10", 9.38},
    {"Amac", "hybrid60_air10", "RITR", "NDCG@10", 10.97},
    {"Amac", "hybrid60_air20", "SAT", "NDCG@10", 9.37},
    {"Amac", "hybrid60_air20", "RITR", "NDCG@10", 10.94},
    {"Amac", "hybrid60_air30", "SAT", "NDCG@10", 9.32},
    {"Amac", "hybrid60_air30", "RITR", "NDCG@10", 10.87},
    {"Amac", "hybrid60_air40", "SAT", "NDCG@10", 9.26},
    {"Amac", "hybrid60_air40", "RITR", "NDCG@10", 10.75},
    {"Amac", "hybrid60_air50", "SAT", "NDCG@10", 9.09},
    {"Amac", "hybrid60_air50", "RITR", "NDCG@10", 10.65},
    {"Amac", "hybrid60_air60", "SAT", "NDCG@10", 8.86},
    {"Amac", "hybrid60_air60", "RITR", "NDCG@10", 10.44},
    {"Amac", "hybrid60_air70", "SAT", "NDCG@10", 8.75},
    {"Amac", "hybrid60_air70", "RITR", "NDCG@10", 10.17},
    {"Amac", "hybrid60_air10", "SAT", "NDCG@20", 13.49},
    {"Amac", "hybrid60_air10", "RITR", "NDCG@20", 15.45},
    {"Amac", "hybrid60_air20", "SAT", "NDCG@20", 13.42},
    {"Amac", "hybrid60_air20", "RITR", "NDCG@20", 15.39},
    {"Amac", "hybrid60_air30", "SAT", "NDCG@20", 13.36},
    {"Amac", "hybrid60_air30", "RITR", "NDCG@20", 15.29},
    {"Amac", "hybrid60_air40", "SAT", "NDCG@20", 13.23},
    {"Amac", "hybrid60_air40", "RITR", "NDCG@20", 15.14},
    {"Amac", "hybrid60_air50", "SAT", "NDCG@20", 13.09},
    {"Amac", "hybrid60_air50", "RITR", "NDCG@20", 14.98},
    {"Amac", "hybrid60_air60", "SAT", "NDCG@20", 12.79},
    {"Amac", "hybrid60_air60", "RITR", "NDCG@20", 14.73},
    {"Amac", "hybrid60_air70", "SAT", "NDCG@20", 12.4},
    {"Amac", "hybrid60_air70", "RITR", "NDCG@20", 14.53},
    {"Amac", "hybrid60_air10", "SAT", "NDCG@50", 22.0},
    {"Amac", "hybrid60_air10", "RITR", "NDCG@50", 24.33},
    {"Amac", "hybrid60_air20", "SAT", "NDCG@50", 21.92},
    {"Amac", "hybrid60_air20", "RITR", "NDCG@50", 24.3},
    {"Amac", "hybrid60_air30", "SAT", "NDCG@50", 21.84},
    {"Amac", "hybrid60_air30", "RITR", "NDCG@50", 24.16},
    {"Amac", "hybrid60_air40", "SAT", "NDCG@50", 21.7},
    {"Amac", "hybrid60_air40", "RITR", "NDCG@50", 23.99},
    {"Amac", "hybrid60_air50", "SAT", "NDCG@50", 21.47},
    {"Amac", "hybrid60_air50", "RITR", "NDCG@50", 23.81},
    {"Amac", "hybrid60_air60", "SAT", "NDCG@50", 21.11},
    {"Amac", "hybrid60_air60", "RITR", "NDCG@50", 23.5},
    {"Amac", "hybrid60_air70", "SAT", "NDCG@50", 20.91},
    {"Amac", "hybrid60_air70", "RITR", "NDCG@50", 23.53},
    {"Amap", "hybrid60_air10", "SAT", "Recall@10", 3.95},
    {"Amap", "hybrid60_air10", "RITR", "Recall@10", 4.4},
    {"Amap", "hybrid60_air20", "SAT", "Recall@10", 3.9},
    {"Amap", "hybrid60_air20", "RITR", "Recall@10", 4.37},
    {"Amap", "hybrid60_air30", "SAT", "Recall@10", 3.92},
    {"Amap", "hybrid60_air30", "RITR", "Recall@10", 4.35},
    {"Amap", "hybrid60_air40", "SAT", "Recall@10", 3.9},
    {"Amap", "hybrid60_air40", "RITR", "Recall@10", 4.3},
    {"Amap", "hybrid60_air50", "SAT", "Recall@10", 3.86},
    {"Amap", "hybrid60_air50", "RITR", "Recall@10", 4.27},
    {"Amap", "hybrid60_air60", "SAT", "Recall@10", 3.82},
    {"Amap", "hybrid60_air60", "RITR", "Recall@10", 4.25},
    {"Amap", "hybrid60_air70", "SAT", "Recall@10", 3.53},
    {"Amap", "hybrid60_air70", "RITR", "Recall@10", 4.12},
    {"Amap", "hybrid60_air10", "SAT", "Recall@20", 7.16},
    {"Amap", "hybrid60_air10", "RITR", "Recall@20", 7.86},
    {"Amap", "hybrid60_air20", "SAT", "Recall@20", 7.13},
    {"Amap", "hybrid60_air20", "RITR", "Recall@20", 7.82},
    {"Amap", "hybrid60_air30", "SAT", "Recall@20", 7.13},
    {"Amap", "hybrid60_air30", "RITR", "Recall@20", 7.76},
    {"Amap", "hybrid60_air40", "SAT", "Recall@20", 7.05},
    {"Amap", "hybrid60_air40", "RITR", "Recall@20", 7.71},
    {"Amap", "hybrid60_air50", "SAT", "Recall@20", 6.97},
    {"Amap", "hybrid60_air50", "RITR", "Recall@20", 7.64},
    {"Amap", "hybrid60_air60", "SAT", "Recall@20", 6.93},
    {"Amap", "hybrid60_air60", "RITR", "Recall@20", 7.5},
    {"Amap", "hybrid60_air70", "SAT", "Recall@20", 6.43},
    {"Amap", "hybrid60_air70", "RITR", "Recall@20", 7.26},
    {"Amap", "hybrid60_air10", "SAT", "Recall@50", 15.49},
    {"Amap", "hybrid60_air10", "RITR", "Recall@50", 16.48},
    {"Amap", "hybrid60_air20", "SAT", "Recall@50", 15.42},
    {"Amap", "hybrid60_air20", "RITR", "Recall@50", 16.44},
    {"Amap", "hybrid60_air30", "SAT", "Recall@50", 15.44},
    {"Amap", "hybrid60_air30", "RITR", "Recall@50", 16.36},
    {"Amap", "hybrid60_air40", "SAT", "Recall@50", 15.34},
    {"Amap", "hybrid60_air40", "RITR", "Recall@50", 16.29},
    {"Amap", "hybrid60_air50", "SAT", "Recall@50", 15.16},
    {"Amap", "hybrid60_air50", "RITR", "Recall@50", 16.19},
    {"Amap", "hybrid60_air60", "SAT", "Recall@50", 15.2},
    {"Amap", "hybrid60_air60", "RITR", "Recall@50", 16.0},
    {"Amap", "hybrid60_air70", "SAT", "Recall@50", 14.14},
    {"Amap", "hybrid60_air70", "RITR", "Recall@50", 15.39},
    {"Amap", "hybrid60_air10", "SAT", "NDCG@10", 9.68},
    {"Amap", "hybrid60_air10", "RITR", "NDCG@10", 10.8},
    {"Amap", "hybrid60_air20", "SAT", "NDCG@10", 9.6},
    {"Amap", "hybrid60_air20", "RITR", "NDCG@10", 10.75},
    {"Amap", "hybrid60_air30", "SAT", "NDCG@10", 9.63},
    {"Amap", "hybrid60_air30", "RITR", "NDCG@10", 10.67},
    {"Amap", "hybrid60_air40", "SAT", "NDCG@10", 9.57},
    {"Amap", "hybrid60_air40", "RITR", "NDCG@10", 10.57},
    {"Amap", "hybrid60_air50", "SAT", "NDCG@10", 9.48},
    {"Amap", "hybrid60_air50", "RITR", "NDCG@10", 10.48},
    {"Amap", "hybrid60_air60", "SAT", "NDCG@10", 9.39},
    {"Amap", "hybrid60_air60", "RITR", "NDCG@10", 10.42},
    {"Amap", "hybrid60_air70", "SAT", "NDCG@10", 8.71},
    {"Amap", "hybrid60_air70", "RITR", "NDCG@10", 10.14},
    {"Amap", "hybrid60_air10", "SAT", "NDCG@20", 13.98},
    {"Amap", "hybrid60_air10", "RITR", "NDCG@20", 15.39},
    {"Amap", "hybrid60_air20", "SAT", "NDCG@20", 13.92},
    {"Amap", "hybrid60_air20", "RITR", "NDCG@20", 15.33},
    {"Amap", "hybrid60_air30", "SAT", "NDCG@20", 13.93},
    {"Amap", "hybrid60_air30", "RITR", "NDCG@20", 15.22},
    {"Amap", "hybrid60_air40", "SAT", "NDCG@20", 13.81},
    {"Amap", "hybrid60_air40", "RITR", "NDCG@20", 15.11},
    {"Amap", "hybrid60_air50", "SAT", "NDCG@20", 13.65},
    {"Amap", "hybrid60_air50", "RITR", "NDCG@20", 14.96},
    {"Amap", "hybrid60_air60", "SAT", "NDCG@20", 13.57},
    {"Amap", "hybrid60_air60", "RITR", "NDCG@20", 14.78},
    {"Amap", "hybrid60_air70", "SAT", "NDCG@20", 12.62},
    {"Amap", "hybrid60_air70", "RITR", "NDCG@20", 14.34},
    {"Amap", "hybrid60_air10", "SAT", "NDCG@50", 22.86},
    {"Amap", "hybrid60_air10", "RITR", "NDCG@50", 24.55},
    {"Amap", "hybrid60_air20", "SAT", "NDCG@50", 22.76},
    {"Amap", "hybrid60_air20", "RITR", "NDCG@50", 24.5},
    {"Amap", "hybrid60_air30", "SAT", "NDCG@50", 22.8},
    {"Amap", "hybrid60_air30", "RITR", "NDCG@50", 24.37},
    {"Amap", "hybrid60_air40", "SAT", "NDCG@50", 22.66},
    {"Amap", "hybrid60_air40", "RITR", "NDCG@50", 24.25},
    {"Amap", "hybrid60_air50", "SAT", "NDCG@50", 22.41},
    {"Amap", "hybrid60_air50", "RITR", "NDCG@50", 24.09},
    {"Amap", "hybrid60_air60", "SAT", "NDCG@50", 22.39},
    {"Amap", "hybrid60_air60", "RITR", "NDCG@50", 23.84},
    {"Amap", "hybrid60_air70", "SAT", "NDCG@50", 20.89},
    {"Amap", "hybrid60_air70", "RITR", "NDCG@50", 23.0},
    {"Cora", "missing60", "GCN", "Accuracy[X]", 39.43},
    {"Cora", "hybrid60", "GCN", "Accuracy[X]", 29.39},
    {"Cora", "missing60", "GAT", "Accuracy[X]", 41.43},
    {"Cora", "hybrid60", "GAT", "Accuracy[X]", 29.39},
    {"Cora", "missing60", "SVGA", "Accuracy[X]", 78.7},
    {"Cora", "hybrid60", "SVGA", "Accuracy[X]", 67.91},
    {"Cora", "missing60", "SAT", "Accuracy[X]", 76.44},
    {"Cora", "hybrid60", "SAT", "Accuracy[X]", 72.53},
    {"Cora", "missing60", "ITR", "Accuracy[X]", 81.43},
    {"Cora", "hybrid60", "ITR", "Accuracy[X]", 75.04},
    {"Cora", "missing60", "RITR", "Accuracy[X]", 81.64},
    {"Cora", "hybrid60", "RITR", "Accuracy[X]", 78.11},
    {"Citeseer", "missing60", "GCN", "Accuracy[X]", 37.68},
    {"Citeseer", "hybrid60", "GCN", "Accuracy[X]", 20.96},
    {"Citeseer", "missing60", "GAT", "Accuracy[X]", 21.29},
    {"Citeseer", "hybrid60", "GAT", "Accuracy[X]", 21.26},
    {"Citeseer", "missing60", "SVGA", "Accuracy[X]", 62.33},
    {"Citeseer", "hybrid60", "SVGA", "Accuracy[X]", 54.51},
    {"Citeseer", "missing60", "SAT", "Accuracy[X]", 60.1},
    {"Citeseer", "hybrid60", "SAT", "Accuracy[X]", 54.15},
    {"Citeseer", "missing60", "ITR", "Accuracy[X]", 67.15},
    {"Citeseer", "hybrid60", "ITR", "Accuracy[X]", 61.05},
    {"Citeseer", "missing60", "RITR", "Accuracy[X]", 67.47},
    {"Citeseer", "hybrid60", "RITR", "Accuracy[X]", 63.75},
    {"Amac", "missing60", "GCN", "Accuracy[X]", 36.6},
    {"Amac", "hybrid60", "GCN", "Accuracy[X]", 35.76},
    {"Amac", "missing60", "GAT", "Accuracy[X]", 37.47},
    {"Amac", "hybrid60", "GAT", "Accuracy[X]", 36.98},
    {"Amac", "missing60", "SVGA", "Accuracy[X]", 72.56},
    {"Amac", "hybrid60", "SVGA", "Accuracy[X]", 64.44},
    {"Amac", "missing60", "SAT", "Accuracy[X]", 74.1},
    {"Amac", "hybrid60", "SAT", "Accuracy[X]", 68.94},
    {"Amac", "missing60", "ITR", "Accuracy[X]", 83.88},
    {"Amac", "hybrid60", "ITR", "Accuracy[X]", 80.68},
    {"Amac", "missing60", "RITR", "Accuracy[X]", 85.28},
    {"Amac", "hybrid60", "RITR", "Accuracy[X]", 82.92},
    {"Amap", "missing60", "GCN", "Accuracy[X]", 26.83},
    {"Amap", "hybrid60", "GCN", "Accuracy[X]", 25.7},
    {"Amap", "missing60", "GAT", "Accuracy[X]", 25.98},
    {"Amap", "hybrid60", "GAT", "Accuracy[X]", 25.39},
    {"Amap", "missing60", "SVGA", "Accuracy[X]", 88.55},
    {"Amap", "hybrid60", "SVGA", "Accuracy[X]", 82.49},
    {"Amap", "missing60", "SAT", "Accuracy[X]", 87.62},
    {"Amap", "hybrid60", "SAT", "Accuracy[X]", 84.53},
    {"Amap", "missing60", "ITR", "Accuracy[X]", 90.75},
    {"Amap", "hybrid60", "ITR", "Accuracy[X]", 88.98},
    {"Amap", "missing60", "RITR", "Accuracy[X]", 91.27},
    {"Amap", "hybrid60", "RITR", "Accuracy[X]", 90.49},
    {"Cora", "missing60", "GCN", "Accuracy[X+A]", 43.87},
    {"Cora", "hybrid60", "GCN", "Accuracy[X+A]", 30.4},
    {"Cora", "missing60", "GAT", "Accuracy[X+A]", 45.25},
    {"Cora", "hybrid60", "GAT", "Accuracy[X+A]", 30.8},
    {"Cora", "missing60", "GINN", "Accuracy[X+A]", 67.58},
    {"Cora", "hybrid60", "GINN", "Accuracy[X+A]", 38.16},
    {"Cora", "missing60", "GCNMF", "Accuracy[X+A]", 70.3},
    {"Cora", "hybrid60", "GCNMF", "Accuracy[X+A]", 57.19},
    {"Cora", "missing60", "SVGA", "Accuracy[X+A]", 83.78},
    {"Cora", "hybrid60", "SVGA", "Accuracy[X+A]", 77.7},
    {"Cora", "missing60", "SAT", "Accuracy[X+A]", 83.27},
    {"Cora", "hybrid60", "SAT", "Accuracy[X+A]", 80.37},
    {"Cora", "missing60", "ITR", "Accuracy[X+A]", 85.56},
    {"Cora", "hybrid60", "ITR", "Accuracy[X+A]", 82.53},
    {"Cora", "missing60", "RITR", "Accuracy[X+A]", 85.81},
    {"Cora", "hybrid60", "RITR", "Accuracy[X+A]", 84.29},
    {"Citeseer", "missing60", "GCN", "Accuracy[X+A]", 40.79},
    {"Citeseer", "hybrid60", "GCN", "Accuracy[X+A]", 26.89},
    {"Citeseer", "missing60", "GAT", "Accuracy[X+A]", 26.88},
    {"Citeseer", "hybrid60", "GAT", "Accuracy[X+A]", 26.49},
    {"Citeseer", "missing60", "GINN", "Accuracy[X+A]", 55.32},
    {"Citeseer", "hybrid60", "GINN", "Accuracy[X+A]", 23.66},
    {"Citeseer", "missing60", "GCNMF", "Accuracy[X+A]", 63.4},
    {"Citeseer", "hybrid60", "GCNMF", "Accuracy[X+A]", 50.9},
    {"Citeseer", "missing60", "SVGA", "Accuracy[X+A]", 66.19},
    {"Citeseer", "hybrid60", "SVGA", "Accuracy[X+A]", 60.3},
    {"Citeseer", "missing60", "SAT", "Accuracy[X+A]", 65.99},
    {"Citeseer", "hybrid60", "SAT", "Accuracy[X+A]", 64.16},
    {"Citeseer", "missing60", "ITR", "Accuracy[X+A]", 68.09},
    {"Citeseer", "hybrid60", "ITR", "Accuracy[X+A]", 64.93},
    {"Citeseer", "missing60", "RITR", "Accuracy[X+A]", 69.01},
    {"Citeseer", "hybrid60", "RITR", "Accuracy[X+A]", 66.0},
    {"Amac", "missing60", "GCN", "Accuracy[X+A]", 39.74},
    {"Amac", "hybrid60", "GCN", "Accuracy[X+A]", 38.88},
    {"Amac", "missing60", "GAT", "Accuracy[X+A]", 40.34},
    {"Amac", "hybrid60", "GAT", "Accuracy[X+A]", 39.78},
    {"Amac", "missing60", "GINN", "Accuracy[X+A]", 81.27},
    {"Amac", "hybrid60", "GINN", "Accuracy[X+A]", 25.45},
    {"Amac", "missing60", "GCNMF", "Accuracy[X+A]", 76.43},
    {"Amac", "hybrid60", "GCNMF", "Accuracy[X+A]", 35.4},
    {"Amac", "missing60", "SVGA", "Accuracy[X+A]", 85.87},
    {"Amac", "hybrid60", "SVGA", "Accuracy[X+A]", 80.56},
    {"Amac", "missing60", "SAT", "Accuracy[X+A]", 85.19},
    {"Amac", "hybrid60", "SAT", "Accuracy[X+A]", 83.33},
    {"Amac", "missing60", "ITR", "Accuracy[X+A]", 87.65},
    {"Amac", "hybrid60", "ITR", "Accuracy[X+A]", 84.96},
    {"Amac", "missing60", "RITR", "Accuracy[X+A]", 88.49},
    {"Amac", "hybrid60", "RITR", "Accuracy[X+A]", 86.19},
    {"Amap", "missing60", "GCN", "Accuracy[X+A]", 36.56},
    {"Amap", "hybrid60", "GCN", "Accuracy[X+A]", 36.08},
    {"Amap", "missing60", "GAT", "Accuracy[X+A]", 37.89},
    {"Amap", "hybrid60", "GAT", "Accuracy[X+A]", 37.75},
    {"Amap", "missing60", "GINN", "Accuracy[X+A]", 87.77},
    {"Amap", "hybrid60", "GINN", "Accuracy[X+A]", 37.25},
    {"Amap", "missing60", "GCNMF", "Accuracy[X+A]", 87.79},
    {"Amap", "hybrid60", "GCNMF", "Accuracy[X+A]", 82.04},
    {"Amap", "missing60", "SVGA", "Accuracy[X+A]", 89.9},
    {"Amap", "hybrid60", "SVGA", "Accuracy[X+A]", 84.33},
    {"Amap", "missing60", "SAT", "Accuracy[X+A]", 91.63},
    {"Amap", "hybrid60", "SAT", "Accuracy[X+A]", 90.49},
    {"Amap", "missing60", "ITR", "Accuracy[X+A]", 91.87},
    {"Amap", "hybrid60", "ITR", "Accuracy[X+A]", 88.98},
    {"Amap", "missing60", "RITR", "Accuracy[X+A]", 92.24},
    {"Amap", "hybrid60", "RITR", "Accuracy[X+A]", 91.75},
};
// clang-format on

}  // namespace

std::span<const ReferenceEntry> reference_results() { return kTable; }

std::optional<double> reference_value(std::string_view dataset, std::string_view setting,
                                      std::string_view method, std::string_view metric) {
  for (const auto& e : kTable) {
    if (e.dataset == dataset && e.setting == setting && e.method == method && e.metric == metric) {
      return e.value;
    }
  }
  return std::nullopt;
}

}  // namespace ritr::eval
