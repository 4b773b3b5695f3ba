"""Figure datasets as CSV tables"""
