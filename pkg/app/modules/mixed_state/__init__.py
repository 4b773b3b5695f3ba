"""Two-qubit density matrices, Hill-Wootters concurrence and Bell mixtures"""
