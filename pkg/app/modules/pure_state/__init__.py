"""General two-qubit pure states"""
