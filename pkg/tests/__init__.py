"""
测试模块
Tests Module
"""