// SPDX-License-Identifier: Apache-2.0
//
// bandspec: Monte Carlo laboratory for random Hermitian finite-band matrices
// Copyright (C) 2026 The bandspec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Dense Eigen reference helpers shared by the unit tests.

#pragma once

#include <Eigen/Dense>

#include "bandspec/band_matrix.hpp"

namespace oracle {

using MatrixXc = Eigen::MatrixXcd;

inline MatrixXc to_eigen(std::vector<bandspec::cplx> const& dense, std::size_t rows, std::size_t cols)
{
    MatrixXc M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            M(i, j) = dense[i * cols + j];
    return M;
}

inline MatrixXc channel_matrix(bandspec::BlockBandedChannel const& H)
{
    return to_eigen(H.dense(), H.rows(), H.cols());
}

inline MatrixXc hermitian_matrix(bandspec::BandedHermitian const& A)
{
    return to_eigen(A.dense(), A.order(), A.order());
}

inline Eigen::VectorXd eigenvalues(MatrixXc const& A)
{
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(A, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

} // namespace oracle
