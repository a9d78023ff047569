#!/usr/bin/python3
# -*- coding: utf-8 -*-
